//! Contexts, soft sets and soft points.
//!
//! A soft set over a context `(U, E)` is a partial map from parameters to
//! subsets of `U`. It is defined exactly on its domain `A ⊆ E`; outside `A`
//! it has no value at all, which is different from having the value `∅`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bits::{ParamSet, PointSet, MAX_LABELS};
use crate::error::{Result, SoftError};

/// The ambient universe and parameter set. Labels are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Context {
    name: String,
    universe: Vec<String>,
    params: Vec<String>,
}

impl Context {
    pub fn new<S, I, J>(name: impl Into<String>, universe: I, params: J) -> Result<Arc<Context>>
    where
        S: Into<String>,
        I: IntoIterator<Item = S>,
        J: IntoIterator<Item = S>,
    {
        let name = name.into();
        let universe = sorted_labels(&name, "universe", universe)?;
        let params = sorted_labels(&name, "params", params)?;
        Ok(Arc::new(Context {
            name,
            universe,
            params,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn n_points(&self) -> usize {
        self.universe.len()
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::full(self.universe.len())
    }

    pub fn all_params(&self) -> ParamSet {
        ParamSet::full(self.params.len())
    }

    pub fn point_index(&self, label: &str) -> Result<usize> {
        self.universe
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| {
                SoftError::Domain(format!(
                    "`{label}` is not a point of context `{}`",
                    self.name
                ))
            })
    }

    pub fn param_index(&self, label: &str) -> Result<usize> {
        self.params
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| {
                SoftError::Domain(format!(
                    "`{label}` is not a parameter of context `{}`",
                    self.name
                ))
            })
    }

    pub fn point_label(&self, i: usize) -> &str {
        &self.universe[i]
    }

    pub fn param_label(&self, i: usize) -> &str {
        &self.params[i]
    }

    pub fn point_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        labels
            .iter()
            .map(|l| self.point_index(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(PointSet::from_indices)
    }

    pub fn param_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ParamSet> {
        labels
            .iter()
            .map(|l| self.param_index(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(ParamSet::from_indices)
    }

    pub fn point_labels(&self, s: PointSet) -> Vec<&str> {
        s.iter().map(|i| self.point_label(i)).collect()
    }

    pub fn param_labels(&self, s: ParamSet) -> Vec<&str> {
        s.iter().map(|i| self.param_label(i)).collect()
    }

    pub fn check_params(&self, a: ParamSet) -> Result<()> {
        if a.is_subset(self.all_params()) {
            Ok(())
        } else {
            Err(SoftError::Domain(format!(
                "parameter subset is not contained in the parameters of `{}`",
                self.name
            )))
        }
    }

    pub fn check_points(&self, s: PointSet) -> Result<()> {
        if s.is_subset(self.all_points()) {
            Ok(())
        } else {
            Err(SoftError::Domain(format!(
                "point subset is not contained in the universe of `{}`",
                self.name
            )))
        }
    }

    pub(crate) fn fmt_points(&self, s: PointSet) -> String {
        format!("{{{}}}", self.point_labels(s).join(", "))
    }

    pub(crate) fn fmt_params(&self, s: ParamSet) -> String {
        format!("{{{}}}", self.param_labels(s).join(", "))
    }
}

fn sorted_labels<S, I>(ctx: &str, what: &str, it: I) -> Result<Vec<String>>
where
    S: Into<String>,
    I: IntoIterator<Item = S>,
{
    let mut labels: Vec<String> = it.into_iter().map(Into::into).collect();
    if labels.is_empty() {
        return Err(SoftError::Argument(format!(
            "context `{ctx}`: {what} must be non-empty"
        )));
    }
    if labels.len() > MAX_LABELS {
        return Err(SoftError::Bounds(format!(
            "context `{ctx}`: {what} has {} labels, at most {MAX_LABELS} are supported",
            labels.len()
        )));
    }
    labels.sort();
    if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
        return Err(SoftError::Argument(format!(
            "context `{ctx}`: duplicate label `{}` in {what}",
            w[0]
        )));
    }
    Ok(labels)
}

pub(crate) fn same_context(a: &Arc<Context>, b: &Arc<Context>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn ensure_same(a: &Arc<Context>, b: &Arc<Context>) -> Result<()> {
    if same_context(a, b) {
        Ok(())
    } else {
        Err(SoftError::ContextMismatch {
            expected: a.name.clone(),
            found: b.name.clone(),
        })
    }
}

/// A soft set `F_A`. Values outside the domain are stored as zero so that
/// structural equality coincides with soft-set equality.
#[derive(Clone)]
pub struct SoftSet {
    ctx: Arc<Context>,
    domain: ParamSet,
    values: Vec<PointSet>,
}

impl SoftSet {
    /// Builds a soft set from a domain and a value for every parameter in it.
    pub fn new(
        ctx: &Arc<Context>,
        domain: ParamSet,
        value: impl Fn(usize) -> PointSet,
    ) -> Result<SoftSet> {
        ctx.check_params(domain)?;
        let mut values = vec![PointSet::EMPTY; ctx.n_params()];
        for e in domain.iter() {
            let v = value(e);
            ctx.check_points(v)?;
            values[e] = v;
        }
        Ok(SoftSet {
            ctx: ctx.clone(),
            domain,
            values,
        })
    }

    /// Builds a soft set from `(parameter, points)` label pairs; the listed
    /// parameters form the domain.
    pub fn from_labels<P: AsRef<str>, X: AsRef<str>>(
        ctx: &Arc<Context>,
        entries: &[(P, &[X])],
    ) -> Result<SoftSet> {
        let mut domain = ParamSet::EMPTY;
        let mut values = vec![PointSet::EMPTY; ctx.n_params()];
        for (param, points) in entries {
            let e = ctx.param_index(param.as_ref())?;
            if domain.contains(e) {
                return Err(SoftError::Argument(format!(
                    "parameter `{}` listed twice",
                    param.as_ref()
                )));
            }
            domain.insert(e);
            values[e] = ctx.point_set(points)?;
        }
        Ok(SoftSet {
            ctx: ctx.clone(),
            domain,
            values,
        })
    }

    pub(crate) fn from_parts(
        ctx: &Arc<Context>,
        domain: ParamSet,
        mut values: Vec<PointSet>,
    ) -> SoftSet {
        debug_assert_eq!(values.len(), ctx.n_params());
        for (e, v) in values.iter_mut().enumerate() {
            if !domain.contains(e) {
                *v = PointSet::EMPTY;
            }
        }
        SoftSet {
            ctx: ctx.clone(),
            domain,
            values,
        }
    }

    /// `Ũ_A`: every parameter of `a` maps to the whole universe.
    pub fn whole(ctx: &Arc<Context>, a: ParamSet) -> Result<SoftSet> {
        let all = ctx.all_points();
        SoftSet::new(ctx, a, |_| all)
    }

    /// `φ_A`: every parameter of `a` maps to the empty set.
    pub fn null(ctx: &Arc<Context>, a: ParamSet) -> Result<SoftSet> {
        SoftSet::new(ctx, a, |_| PointSet::EMPTY)
    }

    /// `Ũ_E`.
    pub fn whole_all(ctx: &Arc<Context>) -> SoftSet {
        let all = ctx.all_points();
        SoftSet::from_parts(ctx, ctx.all_params(), vec![all; ctx.n_params()])
    }

    /// `φ_E`.
    pub fn null_all(ctx: &Arc<Context>) -> SoftSet {
        SoftSet::from_parts(ctx, ctx.all_params(), vec![PointSet::EMPTY; ctx.n_params()])
    }

    /// The soft point `x_A` as a soft set.
    pub fn soft_point(ctx: &Arc<Context>, x: usize, a: ParamSet) -> Result<SoftSet> {
        SoftPoint::new(ctx, x, a).map(|p| p.to_soft_set())
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn domain(&self) -> ParamSet {
        self.domain
    }

    /// `F(e)`, or `None` when `e` is outside the domain.
    pub fn value(&self, e: usize) -> Option<PointSet> {
        self.domain.contains(e).then(|| self.values[e])
    }

    pub(crate) fn raw(&self, e: usize) -> PointSet {
        self.values[e]
    }

    /// `(parameter, value)` pairs over the domain, in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, PointSet)> + '_ {
        self.domain.iter().map(move |e| (e, self.values[e]))
    }

    pub fn complement(&self) -> SoftSet {
        let all = self.ctx.all_points();
        let values = self.values.iter().map(|v| all.difference(*v)).collect();
        SoftSet::from_parts(&self.ctx, self.domain, values)
    }

    /// Binary intersection. Panics if the contexts differ.
    pub fn meet(&self, other: &SoftSet) -> SoftSet {
        assert!(
            same_context(&self.ctx, &other.ctx),
            "soft sets from different contexts"
        );
        let domain = self.domain.intersection(other.domain);
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.intersection(*b))
            .collect();
        SoftSet::from_parts(&self.ctx, domain, values)
    }

    /// Binary union. On a parameter only one side defines, that side's
    /// value is taken. Panics if the contexts differ.
    pub fn join(&self, other: &SoftSet) -> SoftSet {
        assert!(
            same_context(&self.ctx, &other.ctx),
            "soft sets from different contexts"
        );
        let domain = self.domain.union(other.domain);
        // values are zero outside each domain, so a plain OR is exact
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.union(*b))
            .collect();
        SoftSet::from_parts(&self.ctx, domain, values)
    }

    /// `F ⊆̃ G`: domain inclusion plus value inclusion on `F`'s domain.
    pub fn is_subset(&self, other: &SoftSet) -> bool {
        same_context(&self.ctx, &other.ctx)
            && self.domain.is_subset(other.domain)
            && self.entries().all(|(e, v)| v.is_subset(other.values[e]))
    }

    /// Every value on the domain is empty (true for `φ_∅` as well).
    pub fn is_null(&self) -> bool {
        self.values.iter().all(|v| v.is_empty())
    }

    pub fn is_whole_all(&self) -> bool {
        let all = self.ctx.all_points();
        self.domain == self.ctx.all_params() && self.values.iter().all(|v| *v == all)
    }

    /// Restriction to `domain ∩ b`.
    pub fn restrict(&self, b: ParamSet) -> SoftSet {
        SoftSet::from_parts(&self.ctx, self.domain.intersection(b), self.values.clone())
    }

    /// Extends the domain by `b`, giving each new parameter the value `∅`.
    /// Equal to `self ∪̃ φ_b`.
    pub fn pad(&self, b: ParamSet) -> SoftSet {
        SoftSet::from_parts(&self.ctx, self.domain.union(b), self.values.clone())
    }

    /// True iff `self` is `core` extended by empty values on extra parameters
    /// (including `core` itself).
    pub fn is_padding_of(&self, core: &SoftSet) -> bool {
        core.domain.is_subset(self.domain)
            && self.entries().all(|(e, v)| {
                if core.domain.contains(e) {
                    v == core.values[e]
                } else {
                    v.is_empty()
                }
            })
    }

    /// Points `x` with `x ∈ F(e)` for every `e` in the domain. For the
    /// empty domain this is the whole universe.
    pub fn common_points(&self) -> PointSet {
        self.entries()
            .fold(self.ctx.all_points(), |acc, (_, v)| acc.intersection(v))
    }
}

/// `⋂̃` of a non-empty family: domain and values are intersected.
pub fn intersect(family: &[SoftSet]) -> Result<SoftSet> {
    let (first, rest) = family
        .split_first()
        .ok_or_else(|| SoftError::Argument("intersection of an empty family".into()))?;
    rest.iter().try_fold(first.clone(), |acc, s| {
        ensure_same(&acc.ctx, &s.ctx)?;
        Ok(acc.meet(s))
    })
}

/// `⋃̃` of a non-empty family: the domain is the union of domains and each
/// parameter collects the values of the members defined there.
pub fn union(family: &[SoftSet]) -> Result<SoftSet> {
    let (first, rest) = family
        .split_first()
        .ok_or_else(|| SoftError::Argument("union of an empty family".into()))?;
    rest.iter().try_fold(first.clone(), |acc, s| {
        ensure_same(&acc.ctx, &s.ctx)?;
        Ok(acc.join(s))
    })
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.domain == other.domain
            && self.values == other.values
            && same_context(&self.ctx, &other.ctx)
    }
}

impl Eq for SoftSet {}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.domain.hash(state);
        self.values.hash(state);
    }
}

/// Canonical order within one context: by domain mask, then by values.
impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.domain
            .cmp(&other.domain)
            .then_with(|| self.values.cmp(&other.values))
            .then_with(|| self.ctx.name.cmp(&other.ctx.name))
    }
}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (e, v)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {}", self.ctx.param_label(e), self.ctx.fmt_points(v))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftSet{self}")
    }
}

/// A soft point `x_A`: the point `x` on a non-empty parameter set `A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SoftPoint {
    ctx: Arc<Context>,
    point: usize,
    domain: ParamSet,
}

impl SoftPoint {
    pub fn new(ctx: &Arc<Context>, point: usize, domain: ParamSet) -> Result<SoftPoint> {
        if point >= ctx.n_points() {
            return Err(SoftError::Domain(format!(
                "point index {point} outside the universe of `{}`",
                ctx.name
            )));
        }
        ctx.check_params(domain)?;
        if domain.is_empty() {
            return Err(SoftError::Argument(
                "a soft point needs a non-empty domain".into(),
            ));
        }
        Ok(SoftPoint {
            ctx: ctx.clone(),
            point,
            domain,
        })
    }

    pub fn from_labels<S: AsRef<str>>(
        ctx: &Arc<Context>,
        point: &str,
        domain: &[S],
    ) -> Result<SoftPoint> {
        let x = ctx.point_index(point)?;
        let a = ctx.param_set(domain)?;
        SoftPoint::new(ctx, x, a)
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn domain(&self) -> ParamSet {
        self.domain
    }

    pub fn to_soft_set(&self) -> SoftSet {
        let x = PointSet::singleton(self.point);
        SoftSet::from_parts(&self.ctx, self.domain, vec![x; self.ctx.n_params()])
    }

    /// `x_A ∈̃ F`: `A ⊆ dom F` and `x ∈ F(e)` for every `e ∈ A`.
    pub fn is_in(&self, f: &SoftSet) -> bool {
        same_context(&self.ctx, &f.ctx)
            && self.domain.is_subset(f.domain)
            && self.domain.iter().all(|e| f.values[e].contains(self.point))
    }

    /// All soft points of the context with the given domain.
    pub fn all_at(ctx: &Arc<Context>, a: ParamSet) -> impl Iterator<Item = SoftPoint> + '_ {
        (0..ctx.n_points()).map(move |x| SoftPoint {
            ctx: ctx.clone(),
            point: x,
            domain: a,
        })
    }
}

impl fmt::Display for SoftPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{}",
            self.ctx.point_label(self.point),
            self.ctx.fmt_params(self.domain)
        )
    }
}

impl fmt::Debug for SoftPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftPoint({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Arc<Context> {
        Context::new("C", ["x", "z"], ["e1", "e2", "e3", "e4"]).unwrap()
    }

    fn set(c: &Arc<Context>, entries: &[(&str, &[&str])]) -> SoftSet {
        SoftSet::from_labels(c, entries).unwrap()
    }

    #[test]
    fn context_rejects_bad_labels() {
        assert!(Context::new("C", Vec::<String>::new(), vec!["e".to_string()]).is_err());
        assert!(Context::new("C", ["x", "x"], ["e"]).is_err());
        assert!(Context::new("C", ["x"], Vec::<&str>::new()).is_err());
        let c = Context::new("C", ["z", "x"], ["e2", "e1"]).unwrap();
        assert_eq!(c.universe(), ["x", "z"]);
        assert_eq!(c.params(), ["e1", "e2"]);
    }

    #[test]
    fn whole_and_null() {
        let c = ctx();
        let a = c.param_set(&["e1", "e2"]).unwrap();
        let w = SoftSet::whole(&c, a).unwrap();
        assert_eq!(w, set(&c, &[("e1", &["x", "z"]), ("e2", &["x", "z"])]));
        assert!(SoftSet::whole(&c, c.all_params()).unwrap().is_whole_all());
        let empty = SoftSet::whole(&c, ParamSet::EMPTY).unwrap();
        assert_eq!(empty.domain(), ParamSet::EMPTY);
        assert!(SoftSet::whole(&c, ParamSet(1 << 9)).is_err());

        let n = SoftSet::null(&c, a).unwrap();
        assert_eq!(n, set(&c, &[("e1", &[]), ("e2", &[])]));
        assert_eq!(
            SoftSet::null(&c, c.all_params()).unwrap(),
            SoftSet::null_all(&c)
        );
        let f = set(&c, &[("e1", &["x"]), ("e2", &["x", "z"]), ("e3", &[])]);
        assert!(n.is_subset(&f));
        assert!(SoftSet::null(&c, ParamSet(1 << 9)).is_err());
    }

    #[test]
    fn complement_examples() {
        let c = ctx();
        let a = c.param_set(&["e1", "e2"]).unwrap();
        assert_eq!(
            SoftSet::whole(&c, a).unwrap().complement(),
            SoftSet::null(&c, a).unwrap()
        );
        let f = set(&c, &[("e1", &["x"]), ("e2", &["x", "z"])]);
        assert_eq!(f.complement().complement(), f);
        assert_eq!(f.complement(), set(&c, &[("e1", &["z"]), ("e2", &[])]));
    }

    #[test]
    fn intersect_and_union_examples() {
        let c = ctx();
        let f = set(&c, &[("e1", &["x"]), ("e2", &["x", "z"])]);
        let g = set(&c, &[("e1", &["z"])]);
        let whole = SoftSet::whole_all(&c);
        assert_eq!(intersect(&[f.clone(), whole.clone()]).unwrap(), f);
        assert_eq!(
            intersect(&[f.clone(), f.complement()]).unwrap(),
            SoftSet::null(&c, f.domain()).unwrap()
        );
        assert_eq!(
            intersect(&[f.clone(), g.clone()]).unwrap(),
            set(&c, &[("e1", &[])])
        );
        assert!(intersect(&[]).is_err());

        let h = set(&c, &[("e2", &["z"])]);
        let u = union(&[g.clone(), h]).unwrap();
        assert_eq!(u, set(&c, &[("e1", &["z"]), ("e2", &["z"])]));
        assert_eq!(
            union(&[SoftSet::null_all(&c), f.clone()]).unwrap().domain(),
            c.all_params()
        );
        // Ũ_E ∪̃ F has domain E under the union definition
        assert_eq!(union(&[whole.clone(), f.clone()]).unwrap(), whole);
        assert!(union(&[]).is_err());

        let other = Context::new("D", ["x", "z"], ["e1"]).unwrap();
        let k = SoftSet::whole_all(&other);
        assert!(matches!(
            union(&[f, k]),
            Err(SoftError::ContextMismatch { .. })
        ));
    }

    #[test]
    fn subset_and_equality() {
        let c = ctx();
        let f = set(&c, &[("e1", &["x"]), ("e2", &["x", "z"])]);
        let g = set(&c, &[("e1", &["x"])]);
        assert!(f.is_subset(&f));
        assert!(g.is_subset(&f));
        assert!(!f.is_subset(&g));
        let a = c.param_set(&["e1"]).unwrap();
        let b = c.param_set(&["e2"]).unwrap();
        assert_ne!(SoftSet::null(&c, a).unwrap(), SoftSet::null(&c, b).unwrap());
        assert!(SoftSet::null(&c, ParamSet::EMPTY).unwrap().is_subset(&g));
    }

    #[test]
    fn soft_point_and_membership() {
        let c = ctx();
        let a = c.param_set(&["e1", "e2"]).unwrap();
        let x = c.point_index("x").unwrap();
        let z = c.point_index("z").unwrap();
        let xa = SoftSet::soft_point(&c, x, a).unwrap();
        assert_eq!(xa, set(&c, &[("e1", &["x"]), ("e2", &["x"])]));
        assert!(xa.is_subset(&SoftSet::whole(&c, a).unwrap()));
        assert_eq!(xa.complement().value(0), Some(PointSet::singleton(z)));
        assert!(SoftSet::soft_point(&c, x, ParamSet::EMPTY).is_err());

        let p = SoftPoint::new(&c, x, a).unwrap();
        assert!(p.is_in(&SoftSet::whole_all(&c)));
        assert!(!p.is_in(&SoftSet::null(&c, a).unwrap()));
        let g = set(&c, &[("e1", &["x"])]);
        let zp = SoftPoint::new(&c, z, a).unwrap();
        assert!(!zp.is_in(&g));
        assert!(!p.is_in(&g), "domain {{e1,e2}} is not inside {{e1}}");
        assert_eq!(p.to_string(), "x_{e1, e2}");
    }

    #[test]
    fn padding() {
        let c = ctx();
        let g = set(&c, &[("e1", &["x"])]);
        let padded = g.pad(c.param_set(&["e3"]).unwrap());
        assert_eq!(padded, set(&c, &[("e1", &["x"]), ("e3", &[])]));
        assert!(padded.is_padding_of(&g));
        assert!(g.is_padding_of(&g));
        assert!(!g.is_padding_of(&padded));
        assert_eq!(
            padded,
            g.join(&SoftSet::null(&c, c.param_set(&["e3"]).unwrap()).unwrap())
        );
    }
}
