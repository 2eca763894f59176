//! Soft functions `f = (φ, ψ)` between two contexts.

use std::fmt;
use std::sync::Arc;

use crate::bits::{ParamSet, PointSet};
use crate::cotopo::SoftCotopology;
use crate::error::{Result, SoftError};
use crate::soft::{ensure_same, Context, SoftPoint, SoftSet};

/// A soft map given by explicit tables: `phi[x]` is the image of point `x`
/// and `psi[e]` the image of parameter `e`.
#[derive(Clone, PartialEq, Eq)]
pub struct SoftMap {
    source: Arc<Context>,
    target: Arc<Context>,
    phi: Vec<usize>,
    psi: Vec<usize>,
}

impl SoftMap {
    pub fn new(
        source: &Arc<Context>,
        target: &Arc<Context>,
        phi: Vec<usize>,
        psi: Vec<usize>,
    ) -> Result<SoftMap> {
        if phi.len() != source.n_points() || psi.len() != source.n_params() {
            return Err(SoftError::Argument(format!(
                "map tables must cover all {} points and {} parameters of `{}`",
                source.n_points(),
                source.n_params(),
                source.name()
            )));
        }
        if let Some(&v) = phi.iter().find(|&&v| v >= target.n_points()) {
            return Err(SoftError::Domain(format!(
                "point index {v} outside the universe of `{}`",
                target.name()
            )));
        }
        if let Some(&p) = psi.iter().find(|&&p| p >= target.n_params()) {
            return Err(SoftError::Domain(format!(
                "parameter index {p} outside the parameters of `{}`",
                target.name()
            )));
        }
        Ok(SoftMap {
            source: source.clone(),
            target: target.clone(),
            phi,
            psi,
        })
    }

    /// Builds a map from label pairs. Every source point and parameter must
    /// be mapped exactly once.
    pub fn from_labels<S: AsRef<str>>(
        source: &Arc<Context>,
        target: &Arc<Context>,
        points: &[(S, S)],
        params: &[(S, S)],
    ) -> Result<SoftMap> {
        let phi = table(
            points,
            source.n_points(),
            |l| source.point_index(l),
            |l| target.point_index(l),
            "point",
        )?;
        let psi = table(
            params,
            source.n_params(),
            |l| source.param_index(l),
            |l| target.param_index(l),
            "parameter",
        )?;
        SoftMap::new(source, target, phi, psi)
    }

    pub fn identity(ctx: &Arc<Context>) -> SoftMap {
        SoftMap {
            source: ctx.clone(),
            target: ctx.clone(),
            phi: (0..ctx.n_points()).collect(),
            psi: (0..ctx.n_params()).collect(),
        }
    }

    pub fn source(&self) -> &Arc<Context> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Context> {
        &self.target
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn is_injective(&self) -> bool {
        is_injective(&self.phi) && is_injective(&self.psi)
    }

    pub fn is_surjective(&self) -> bool {
        PointSet::from_indices(self.phi.iter().copied()) == self.target.all_points()
            && ParamSet::from_indices(self.psi.iter().copied()) == self.target.all_params()
    }

    pub fn map_points(&self, s: PointSet) -> PointSet {
        PointSet::from_indices(s.iter().map(|x| self.phi[x]))
    }

    pub fn map_params(&self, a: ParamSet) -> ParamSet {
        ParamSet::from_indices(a.iter().map(|e| self.psi[e]))
    }

    pub fn pull_points(&self, s: PointSet) -> PointSet {
        PointSet::from_indices((0..self.phi.len()).filter(|&x| s.contains(self.phi[x])))
    }

    pub fn pull_params(&self, b: ParamSet) -> ParamSet {
        ParamSet::from_indices((0..self.psi.len()).filter(|&e| b.contains(self.psi[e])))
    }

    /// `f(F)(p) = φ(⋃{F(e) : e ∈ dom F, ψ(e) = p})` on `ψ(dom F)`.
    pub fn image(&self, f: &SoftSet) -> Result<SoftSet> {
        ensure_same(&self.source, f.context())?;
        let mut values = vec![PointSet::EMPTY; self.target.n_params()];
        for (e, v) in f.entries() {
            let p = self.psi[e];
            values[p] = values[p].union(self.map_points(v));
        }
        Ok(SoftSet::from_parts(
            &self.target,
            self.map_params(f.domain()),
            values,
        ))
    }

    /// `f⁻¹(G)(e) = φ⁻¹(G(ψ(e)))` on `ψ⁻¹(dom G)`.
    pub fn preimage(&self, g: &SoftSet) -> Result<SoftSet> {
        ensure_same(&self.target, g.context())?;
        let domain = self.pull_params(g.domain());
        let values = (0..self.source.n_params())
            .map(|e| self.pull_points(g.raw(self.psi[e])))
            .collect();
        Ok(SoftSet::from_parts(&self.source, domain, values))
    }

    /// Image of a soft point: `φ(x)_{ψ(A)}`.
    pub fn image_point(&self, p: &SoftPoint) -> Result<SoftPoint> {
        ensure_same(&self.source, p.context())?;
        SoftPoint::new(
            &self.target,
            self.phi[p.point()],
            self.map_params(p.domain()),
        )
    }

    /// `f(Ũ_E)`.
    pub fn image_of_whole(&self) -> SoftSet {
        self.image(&SoftSet::whole_all(&self.source))
            .expect("same context")
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &SoftMap) -> Result<SoftMap> {
        ensure_same(&first.target, &self.source)?;
        Ok(SoftMap {
            source: first.source.clone(),
            target: self.target.clone(),
            phi: first.phi.iter().map(|&x| self.phi[x]).collect(),
            psi: first.psi.iter().map(|&e| self.psi[e]).collect(),
        })
    }

    /// The cotopology induced on `f(Ũ_E)`: the smallest cotopology on the
    /// target containing `K ∩̃ f(Ũ_E)` for every member `K` of `kappa`
    /// together with `f(Ũ_E)` itself.
    pub fn restrict_to_image(&self, kappa: &SoftCotopology) -> Result<SoftCotopology> {
        ensure_same(&self.target, kappa.context())?;
        let sub = self.image_of_whole();
        let mut gens: Vec<SoftSet> = kappa.members().iter().map(|k| k.meet(&sub)).collect();
        gens.push(sub);
        Ok(SoftCotopology::generated(&self.target, gens))
    }
}

fn is_injective(t: &[usize]) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    t.iter().all(|v| seen.insert(*v))
}

fn table<S: AsRef<str>>(
    pairs: &[(S, S)],
    n: usize,
    from: impl Fn(&str) -> Result<usize>,
    to: impl Fn(&str) -> Result<usize>,
    what: &str,
) -> Result<Vec<usize>> {
    let mut out = vec![None; n];
    for (a, b) in pairs {
        let i = from(a.as_ref())?;
        if out[i].replace(to(b.as_ref())?).is_some() {
            return Err(SoftError::Argument(format!(
                "{what} `{}` mapped twice",
                a.as_ref()
            )));
        }
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                SoftError::Argument(format!("{what} #{i} has no image; maps must be total"))
            })
        })
        .collect()
}

impl fmt::Display for SoftMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {} {{ points {{",
            self.source.name(),
            self.target.name()
        )?;
        for (x, &v) in self.phi.iter().enumerate() {
            write!(
                f,
                " {}->{}",
                self.source.point_label(x),
                self.target.point_label(v)
            )?;
        }
        f.write_str(" } params {")?;
        for (e, &p) in self.psi.iter().enumerate() {
            write!(
                f,
                " {}->{}",
                self.source.param_label(e),
                self.target.param_label(p)
            )?;
        }
        f.write_str(" } }")
    }
}

impl fmt::Debug for SoftMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftMap({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// U = {a, c}, V = {1, 2}, φ(a)=1, φ(c)=2, ψ(e1)=ψ(e2)=p2.
    fn p4() -> (Arc<Context>, Arc<Context>, SoftMap) {
        let u = Context::new("U", ["a", "c"], ["e1", "e2"]).unwrap();
        let v = Context::new("V", ["1", "2"], ["p1", "p2"]).unwrap();
        let f = SoftMap::from_labels(
            &u,
            &v,
            &[("a", "1"), ("c", "2")],
            &[("e1", "p2"), ("e2", "p2")],
        )
        .unwrap();
        (u, v, f)
    }

    #[test]
    fn tables_must_be_total_and_in_range() {
        let (u, v, _) = p4();
        assert!(
            SoftMap::from_labels(&u, &v, &[("a", "1")], &[("e1", "p2"), ("e2", "p2")]).is_err()
        );
        assert!(SoftMap::from_labels(
            &u,
            &v,
            &[("a", "1"), ("c", "3")],
            &[("e1", "p2"), ("e2", "p2")]
        )
        .is_err());
        assert!(SoftMap::from_labels(
            &u,
            &v,
            &[("a", "1"), ("a", "2")],
            &[("e1", "p2"), ("e2", "p2")]
        )
        .is_err());
        assert!(SoftMap::new(&u, &v, vec![0, 5], vec![0, 0]).is_err());
    }

    #[test]
    fn image_examples() {
        let (u, v, f) = p4();
        let a = u.all_params();
        assert_eq!(
            f.image(&SoftSet::null(&u, a).unwrap()).unwrap(),
            SoftSet::null(&v, f.map_params(a)).unwrap()
        );
        let k = SoftSet::from_labels(&u, &[("e1", &["c"][..]), ("e2", &["c"][..])]).unwrap();
        assert_eq!(
            f.image(&k).unwrap(),
            SoftSet::from_labels(&v, &[("p2", &["2"][..])]).unwrap()
        );
        let img = f.image_of_whole();
        assert_eq!(
            img,
            SoftSet::from_labels(&v, &[("p2", &["1", "2"][..])]).unwrap()
        );
        assert!(img.is_subset(&SoftSet::whole_all(&v)));
        assert_ne!(img, SoftSet::whole_all(&v));
    }

    #[test]
    fn preimage_examples() {
        let (u, v, f) = p4();
        assert_eq!(
            f.preimage(&SoftSet::whole_all(&v)).unwrap(),
            SoftSet::whole_all(&u)
        );
        assert_eq!(
            f.preimage(&SoftSet::null_all(&v)).unwrap(),
            SoftSet::null_all(&u)
        );
        let k2 = SoftSet::from_labels(&v, &[("p1", &["1", "2"][..]), ("p2", &["2"][..])]).unwrap();
        let expected = SoftSet::from_labels(&u, &[("e1", &["c"][..]), ("e2", &["c"][..])]).unwrap();
        assert_eq!(f.preimage(&k2).unwrap(), expected);
        // p1 has no preimage parameter, so only p2 contributes
        let only_p1 = SoftSet::from_labels(&v, &[("p1", &["1"][..])]).unwrap();
        assert_eq!(f.preimage(&only_p1).unwrap().domain(), ParamSet::EMPTY);
    }

    #[test]
    fn compose_and_injectivity() {
        let (u, v, f) = p4();
        assert_eq!(SoftMap::identity(&v).compose(&f).unwrap(), f);
        assert_eq!(f.compose(&SoftMap::identity(&u)).unwrap(), f);
        assert!(f.compose(&f).is_err());
        assert!(!f.is_injective());
        assert!(!f.is_surjective());
        let id = SoftMap::identity(&u);
        assert!(id.compose(&id).unwrap().is_injective());
        assert!(id.is_surjective());
    }

    #[test]
    fn restriction_to_image() {
        let (u, v, f) = p4();
        let k2 = SoftSet::from_labels(&v, &[("p1", &["1", "2"][..]), ("p2", &["2"][..])]).unwrap();
        let kappa = SoftCotopology::new(&v, vec![k2]).unwrap();
        let induced = f.restrict_to_image(&kappa).unwrap();
        let member = SoftSet::from_labels(&v, &[("p2", &["2"][..])]).unwrap();
        assert!(induced.contains(&member));
        assert!(induced.contains(&f.image_of_whole()));
        assert!(induced.contains(&SoftSet::null(&v, v.param_set(&["p1"]).unwrap()).unwrap()));

        let id = SoftMap::identity(&v);
        assert_eq!(id.restrict_to_image(&kappa).unwrap(), kappa);
        let _ = u;
    }
}
