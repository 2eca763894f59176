//! C ABI over `softdito`.
//!
//! Documents are opaque handles owned by the caller and released with
//! [`sd_document_free`]. Every fallible call returns an [`SdStatus`]; on a
//! negative status the message is available from [`sd_last_error`] until the
//! next call on the same thread. Strings handed out are NUL-terminated and
//! released with [`sd_string_free`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use softdito::dsl::{self, Document, Kind};
use softdito::{
    check_cotopology, check_topology, is_dito_continuous, is_kappa_continuous, is_tau_continuous,
    Axiom, DomainScope, SoftError,
};

/// Parsed specification document.
pub struct SdDocument {
    doc: Document,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = -1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = -2,
    /// The document text has syntax or resolution errors.
    Parse = -3,
    /// A name does not resolve to a declaration of the needed kind.
    NotFound = -4,
    /// The arguments are well-formed but the operation is undefined for them.
    Invalid = -5,
    /// A declared family is not closed.
    NotClosed = -6,
    /// The library panicked; the handle may be left unchanged.
    Panic = -99,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("NULs replaced")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Fail(SdStatus);

impl From<SoftError> for Fail {
    fn from(e: SoftError) -> Fail {
        let status = match &e {
            SoftError::UnknownName { .. }
            | SoftError::UnknownAxiom(_)
            | SoftError::UnknownProperty(_) => SdStatus::NotFound,
            SoftError::NotClosed(_) => SdStatus::NotClosed,
            _ => SdStatus::Invalid,
        };
        set_error(e.to_string());
        Fail(status)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SdStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SdStatus::Ok,
        Ok(Err(Fail(s))) => s,
        Err(_) => {
            set_error("internal panic");
            SdStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(Fail(SdStatus::NullArgument));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(format!("{what} is not UTF-8"));
        Fail(SdStatus::InvalidUtf8)
    })
}

unsafe fn doc_arg<'a>(p: *const SdDocument) -> Result<&'a Document, Fail> {
    if p.is_null() {
        set_error("document is null");
        return Err(Fail(SdStatus::NullArgument));
    }
    Ok(&(*p).doc)
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    if p.is_null() {
        set_error(format!("{what} is null"));
        return Err(Fail(SdStatus::NullArgument));
    }
    Ok(&mut *p)
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("NULs replaced")
        .into_raw()
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sd_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failing call on this thread, or null. Valid until
/// the next call on this thread.
#[no_mangle]
pub extern "C" fn sd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `text` into a new document stored in `*out`. On a parse failure
/// every error, one per line, is in [`sd_last_error`].
#[no_mangle]
pub unsafe extern "C" fn sd_document_parse(
    text: *const c_char,
    out: *mut *mut SdDocument,
) -> SdStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = ptr::null_mut();
        let text = str_arg(text, "text")?;
        let doc = dsl::parse(text).map_err(|e| {
            set_error(e.to_string());
            Fail(SdStatus::Parse)
        })?;
        *out = Box::into_raw(Box::new(SdDocument { doc }));
        Ok(())
    })
}

/// Releases a document. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sd_document_free(doc: *mut SdDocument) {
    if !doc.is_null() {
        drop(Box::from_raw(doc));
    }
}

/// Canonical text of the document; parsing it yields an equal document.
#[no_mangle]
pub unsafe extern "C" fn sd_document_to_text(
    doc: *const SdDocument,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        *out = c_string(doc_arg(doc)?.to_text());
        Ok(())
    })
}

/// `*ok` is true iff every declared topology and cotopology is closed.
#[no_mangle]
pub unsafe extern "C" fn sd_document_check(doc: *const SdDocument, ok: *mut bool) -> SdStatus {
    guard(|| {
        let ok = out_arg(ok, "ok")?;
        let doc = doc_arg(doc)?;
        let mut all = true;
        for (_, d) in doc.topologies() {
            all &= check_topology(doc.context(&d.context)?, &d.sets)?.is_ok();
        }
        for (_, d) in doc.cotopologies() {
            all &= check_cotopology(doc.context(&d.context)?, &d.sets)?.is_ok();
        }
        *ok = all;
        Ok(())
    })
}

/// Interior of set `set` in topology or ditopology `space`, formatted as
/// `{e1: {x}, ...}`.
#[no_mangle]
pub unsafe extern "C" fn sd_interior(
    doc: *const SdDocument,
    space: *const c_char,
    set: *const c_char,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let doc = doc_arg(doc)?;
        let (space, set) = (str_arg(space, "space")?, str_arg(set, "set")?);
        let s = doc.set(set)?;
        let r = match doc.kind_of(space) {
            Some(Kind::Topology) => doc.topology(space)?.interior(s)?,
            Some(Kind::Ditopology) => doc.ditopology(space)?.interior(s)?,
            _ => return Err(not_found(space, "topology or ditopology")),
        };
        *out = c_string(r.to_string());
        Ok(())
    })
}

/// Closure of set `set` in cotopology or ditopology `space`.
#[no_mangle]
pub unsafe extern "C" fn sd_closure(
    doc: *const SdDocument,
    space: *const c_char,
    set: *const c_char,
    out: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let doc = doc_arg(doc)?;
        let (space, set) = (str_arg(space, "space")?, str_arg(set, "set")?);
        let s = doc.set(set)?;
        let r = match doc.kind_of(space) {
            Some(Kind::Cotopology) => doc.cotopology(space)?.closure(s)?,
            Some(Kind::Ditopology) => doc.ditopology(space)?.closure(s)?,
            _ => return Err(not_found(space, "cotopology or ditopology")),
        };
        *out = c_string(r.to_string());
        Ok(())
    })
}

fn not_found(name: &str, kind: &str) -> Fail {
    set_error(format!("`{name}` is not a {kind}"));
    Fail(SdStatus::NotFound)
}

/// Checks `axiom` (T0, T1, T2, regular, T3, normal, T4) on `space`. A null
/// `domain` ranges over every parameter set; otherwise it lists one, e.g.
/// `"e1,e2"`. When the axiom fails and `witness` is not null, `*witness`
/// receives a description of the failure; otherwise it is set to null.
#[no_mangle]
pub unsafe extern "C" fn sd_axiom(
    doc: *const SdDocument,
    space: *const c_char,
    axiom: *const c_char,
    domain: *const c_char,
    holds: *mut bool,
    witness: *mut *mut c_char,
) -> SdStatus {
    guard(|| {
        let holds = out_arg(holds, "holds")?;
        if !witness.is_null() {
            *witness = ptr::null_mut();
        }
        let doc = doc_arg(doc)?;
        let space = str_arg(space, "space")?;
        let axiom: Axiom = str_arg(axiom, "axiom")?.parse()?;
        let outcome = match doc.kind_of(space) {
            Some(Kind::Topology) => {
                let t = doc.topology(space)?;
                t.check_axiom(axiom, scope(t.context(), domain)?)?
            }
            Some(Kind::Cotopology) => {
                let k = doc.cotopology(space)?;
                k.check_axiom(axiom, scope(k.context(), domain)?)?
            }
            Some(Kind::Ditopology) => {
                let d = doc.ditopology(space)?;
                d.check_axiom(axiom, scope(d.context(), domain)?)?
            }
            _ => return Err(not_found(space, "topology, cotopology or ditopology")),
        };
        *holds = outcome.holds;
        if let (false, Some(w)) = (witness.is_null(), &outcome.witness) {
            let side = outcome
                .failed_side
                .map(|s| format!(" on {s}"))
                .unwrap_or_default();
            *witness = c_string(format!("{w}{side}"));
        }
        Ok(())
    })
}

unsafe fn scope(
    ctx: &std::sync::Arc<softdito::Context>,
    domain: *const c_char,
) -> Result<DomainScope, Fail> {
    if domain.is_null() {
        return Ok(DomainScope::All);
    }
    let labels: Vec<&str> = str_arg(domain, "domain")?
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let a = ctx.param_set(&labels)?;
    DomainScope::Fixed(a).domains(ctx)?;
    Ok(DomainScope::Fixed(a))
}

/// Continuity of `map` from `source` to `target`, two spaces of one kind:
/// τ-continuity for topologies, κ-continuity for cotopologies and both for
/// ditopologies.
#[no_mangle]
pub unsafe extern "C" fn sd_continuity(
    doc: *const SdDocument,
    map: *const c_char,
    source: *const c_char,
    target: *const c_char,
    continuous: *mut bool,
) -> SdStatus {
    guard(|| {
        let continuous = out_arg(continuous, "continuous")?;
        let doc = doc_arg(doc)?;
        let f = doc.map(str_arg(map, "map")?)?;
        let (s, t) = (str_arg(source, "source")?, str_arg(target, "target")?);
        *continuous = match (doc.kind_of(s), doc.kind_of(t)) {
            (Some(Kind::Topology), Some(Kind::Topology)) => {
                is_tau_continuous(f, &doc.topology(s)?, &doc.topology(t)?)?
            }
            (Some(Kind::Cotopology), Some(Kind::Cotopology)) => {
                is_kappa_continuous(f, &doc.cotopology(s)?, &doc.cotopology(t)?)?
            }
            (Some(Kind::Ditopology), Some(Kind::Ditopology)) => {
                is_dito_continuous(f, &doc.ditopology(s)?, &doc.ditopology(t)?)?
            }
            _ => {
                set_error(format!("`{s}` and `{t}` are not spaces of one kind"));
                return Err(Fail(SdStatus::Invalid));
            }
        };
        Ok(())
    })
}
