use std::ffi::{c_char, CStr, CString};
use std::ptr;

use softdito_ffi::*;

const P1: &str = include_str!("../../core/tests/fixtures/p1.soft");
const P4: &str = include_str!("../../core/tests/fixtures/p4.soft");

struct Doc(*mut SdDocument);

impl Drop for Doc {
    fn drop(&mut self) {
        unsafe { sd_document_free(self.0) }
    }
}

fn parse(text: &str) -> Doc {
    let text = CString::new(text).unwrap();
    let mut doc = ptr::null_mut();
    assert_eq!(
        unsafe { sd_document_parse(text.as_ptr(), &mut doc) },
        SdStatus::Ok
    );
    assert!(!doc.is_null());
    Doc(doc)
}

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { sd_string_free(s) };
    owned
}

fn last_error() -> String {
    let p = sd_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(sd_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn p1_axioms_through_the_abi() {
    let d = parse(P1);
    let mut ok = false;
    assert_eq!(unsafe { sd_document_check(d.0, &mut ok) }, SdStatus::Ok);
    assert!(ok);
    let (space, dom) = (c("tau"), c("e1,e2"));
    let mut holds = false;
    let mut w = ptr::null_mut();
    let st = unsafe {
        sd_axiom(
            d.0,
            space.as_ptr(),
            c("T0").as_ptr(),
            dom.as_ptr(),
            &mut holds,
            &mut w,
        )
    };
    assert_eq!(st, SdStatus::Ok);
    assert!(holds);
    assert!(w.is_null());
    let st = unsafe {
        sd_axiom(
            d.0,
            space.as_ptr(),
            c("T1").as_ptr(),
            dom.as_ptr(),
            &mut holds,
            &mut w,
        )
    };
    assert_eq!(st, SdStatus::Ok);
    assert!(!holds);
    assert_eq!(take(w), "points x_{e1, e2}, z_{e1, e2}");
}

#[test]
fn operators_and_text() {
    let d = parse(P1);
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { sd_interior(d.0, c("tau").as_ptr(), c("F").as_ptr(), &mut out) },
        SdStatus::Ok
    );
    assert_eq!(take(out), "{e1: {x}, e2: {x, z}}");
    assert_eq!(unsafe { sd_document_to_text(d.0, &mut out) }, SdStatus::Ok);
    let text = take(out);
    let again = parse(&text);
    assert_eq!(
        unsafe { sd_document_to_text(again.0, &mut out) },
        SdStatus::Ok
    );
    assert_eq!(take(out), text);
}

#[test]
fn p4_continuity_and_closure() {
    let d = parse(P4);
    let mut cont = false;
    let st = unsafe {
        sd_continuity(
            d.0,
            c("f").as_ptr(),
            c("kappa1").as_ptr(),
            c("kappa2").as_ptr(),
            &mut cont,
        )
    };
    assert_eq!(st, SdStatus::Ok);
    assert!(cont);
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { sd_closure(d.0, c("kappa1").as_ptr(), c("K").as_ptr(), &mut out) },
        SdStatus::Ok
    );
    assert_eq!(take(out), "{e1: {c}, e2: {c}}");
}

#[test]
fn errors_carry_status_and_message() {
    let mut doc = ptr::null_mut();
    let bad = c("context C { universe = {x} params = {e} }\nsoftset F in D { e: {x} }\nbogus\n");
    assert_eq!(
        unsafe { sd_document_parse(bad.as_ptr(), &mut doc) },
        SdStatus::Parse
    );
    assert!(doc.is_null());
    let msg = last_error();
    assert_eq!(msg.lines().count(), 2, "{msg}");

    assert_eq!(
        unsafe { sd_document_parse(ptr::null(), &mut doc) },
        SdStatus::NullArgument
    );

    let d = parse(P1);
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { sd_interior(d.0, c("nope").as_ptr(), c("F").as_ptr(), &mut out) },
        SdStatus::NotFound
    );
    assert_eq!(
        unsafe { sd_interior(d.0, c("tau").as_ptr(), c("nope").as_ptr(), &mut out) },
        SdStatus::NotFound
    );
    assert!(last_error().contains("nope"));
    let mut holds = false;
    let st = unsafe {
        sd_axiom(
            d.0,
            c("tau").as_ptr(),
            c("T9").as_ptr(),
            ptr::null(),
            &mut holds,
            ptr::null_mut(),
        )
    };
    assert_eq!(st, SdStatus::NotFound);
    let st = unsafe {
        sd_axiom(
            d.0,
            c("tau").as_ptr(),
            c("T0").as_ptr(),
            c("e9").as_ptr(),
            &mut holds,
            ptr::null_mut(),
        )
    };
    assert_eq!(st, SdStatus::Invalid);
    assert_eq!(
        unsafe { sd_document_check(d.0, ptr::null_mut()) },
        SdStatus::NullArgument
    );
}

#[test]
fn unclosed_family_is_reported() {
    let d = parse(include_str!("../../core/tests/fixtures/p2.soft"));
    let mut ok = true;
    assert_eq!(unsafe { sd_document_check(d.0, &mut ok) }, SdStatus::Ok);
    assert!(!ok);
    let mut holds = false;
    let st = unsafe {
        sd_axiom(
            d.0,
            c("tau").as_ptr(),
            c("T1").as_ptr(),
            ptr::null(),
            &mut holds,
            ptr::null_mut(),
        )
    };
    assert_eq!(st, SdStatus::NotClosed);
}
