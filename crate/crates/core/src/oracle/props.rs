//! The registered properties. Each `check` is true exactly on a witness:
//! a violation for a law, an example for a claim, a disagreement for a
//! reading comparison.

use std::sync::Arc;

use serde::Serialize;

use super::{enumerate_soft_sets, Instance, Shape};
use crate::cotopo::{is_closed_map, is_kappa_continuous, SoftCotopology};
use crate::dito::{is_dito_continuous, Ditopology};
use crate::error::{Result, SoftError};
use crate::map::SoftMap;
use crate::separation::{Axiom, DomainScope};
use crate::soft::{intersect, union, Context, SoftPoint, SoftSet};
use crate::topo::{is_open_map, is_tau_continuous, SoftTopology};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyKind {
    /// Holds on every instance; a witness is a violation.
    Law,
    /// Some instance exists; a witness is an example.
    Claim,
    /// Two readings of one definition agree; a witness is a disagreement.
    Reading,
}

type Check = fn(&Instance) -> Result<bool>;

#[derive(Clone)]
pub struct Property {
    pub id: &'static str,
    /// The statement checked, as a formula.
    pub anchor: &'static str,
    pub kind: PropertyKind,
    pub shape: Shape,
    pub check: Check,
    /// Smallest `(|U|, |E|)` at which a claim can have a witness.
    pub floor: Option<(usize, usize)>,
    /// Counts instances with some side condition, reported in the note.
    pub tally: Option<Check>,
    pub tally_label: Option<&'static str>,
    pub note: Option<&'static str>,
}

impl std::fmt::Debug for Property {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Property")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .field("shape", &self.shape)
            .finish()
    }
}

impl Property {
    fn new(
        kind: PropertyKind,
        id: &'static str,
        anchor: &'static str,
        shape: Shape,
        check: Check,
    ) -> Property {
        Property {
            id,
            anchor,
            kind,
            shape,
            check,
            floor: None,
            tally: None,
            tally_label: None,
            note: None,
        }
    }

    fn floor(self, u: usize, e: usize) -> Property {
        Property {
            floor: Some((u, e)),
            ..self
        }
    }

    fn note(self, note: &'static str) -> Property {
        Property {
            note: Some(note),
            ..self
        }
    }

    fn tally(self, label: &'static str, f: Check) -> Property {
        Property {
            tally: Some(f),
            tally_label: Some(label),
            ..self
        }
    }
}

fn law(id: &'static str, anchor: &'static str, shape: Shape, check: Check) -> Property {
    Property::new(PropertyKind::Law, id, anchor, shape, check)
}

fn claim(id: &'static str, anchor: &'static str, shape: Shape, check: Check) -> Property {
    Property::new(PropertyKind::Claim, id, anchor, shape, check)
}

fn reading(id: &'static str, anchor: &'static str, shape: Shape, check: Check) -> Property {
    Property::new(PropertyKind::Reading, id, anchor, shape, check)
}

pub fn property(id: &str) -> Result<Property> {
    properties()
        .into_iter()
        .find(|p| p.id == id)
        .ok_or_else(|| SoftError::UnknownProperty(id.to_string()))
}

const ALL: DomainScope = DomainScope::All;

fn ctx_of(i: &Instance) -> &Arc<Context> {
    if let Some(s) = i.sets.first() {
        s.context()
    } else if let Some(t) = i.topologies.first() {
        t.context()
    } else if let Some(k) = i.cotopologies.first() {
        k.context()
    } else {
        i.maps[0].source()
    }
}

fn tau(i: &Instance, n: usize) -> &SoftTopology {
    &i.topologies[n]
}

fn kappa(i: &Instance, n: usize) -> &SoftCotopology {
    &i.cotopologies[n]
}

fn dito(i: &Instance, n: usize) -> Result<Ditopology> {
    Ditopology::new(i.topologies[n].clone(), i.cotopologies[n].clone())
}

fn points(ctx: &Arc<Context>) -> Vec<SoftPoint> {
    ctx.all_params()
        .subsets()
        .filter(|a| !a.is_empty())
        .flat_map(|a| SoftPoint::all_at(ctx, a))
        .collect()
}

fn every_set(ctx: &Arc<Context>) -> Result<Vec<SoftSet>> {
    enumerate_soft_sets(ctx, u64::MAX)
}

fn null(ctx: &Arc<Context>, a: crate::bits::ParamSet) -> SoftSet {
    SoftSet::null(ctx, a).expect("domain from same context")
}

fn whole(ctx: &Arc<Context>, a: crate::bits::ParamSet) -> SoftSet {
    SoftSet::whole(ctx, a).expect("domain from same context")
}

fn holds(t: &SoftTopology, a: Axiom) -> Result<bool> {
    Ok(t.check_axiom(a, ALL)?.holds)
}

fn kholds(k: &SoftCotopology, a: Axiom) -> Result<bool> {
    Ok(k.check_axiom(a, ALL)?.holds)
}

fn complements(sets: &[SoftSet]) -> Vec<SoftSet> {
    sets.iter().map(SoftSet::complement).collect()
}

/// Opens containing `p`, taken from the materialized family.
fn opens_containing(t: &SoftTopology, p: &SoftPoint) -> Result<Vec<SoftSet>> {
    Ok(t.all_members()?
        .into_iter()
        .filter(|g| p.is_in(g))
        .collect())
}

fn closed_excluding(k: &SoftCotopology, p: &SoftPoint) -> Result<Vec<SoftSet>> {
    Ok(k.all_members()?
        .into_iter()
        .filter(|c| !p.is_in(c))
        .collect())
}

/// `f` is τ-continuous at every soft point in the local form: for every
/// open `G ∋ f(p)` some open `H ∋ p` has `f(H) ⊆̃ G`.
fn tau_locally_continuous(f: &SoftMap, t1: &SoftTopology, t2: &SoftTopology) -> Result<bool> {
    for p in points(f.source()) {
        let fp = f.image_point(&p)?;
        let hs = opens_containing(t1, &p)?;
        for g in opens_containing(t2, &fp)? {
            let mut ok = false;
            for h in &hs {
                if f.image(h)?.is_subset(&g) {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every open `G ∋ f(p)` has `f⁻¹(G)` a neighborhood of `p`.
fn tau_preimage_nbhds(f: &SoftMap, t1: &SoftTopology, t2: &SoftTopology) -> Result<bool> {
    for p in points(f.source()) {
        let fp = f.image_point(&p)?;
        for g in opens_containing(t2, &fp)? {
            if !t1.is_nbhd_of_point(&f.preimage(&g)?, &p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Local κ-continuity at every soft point: for every remote neighborhood
/// `M` of `f(p)` some remote neighborhood `N` of `p` has
/// `f(N) ⊇̃ M ∩̃ f(Ũ_E)`. Remote neighborhoods are the subsets of closed
/// sets excluding the point, so closed sets suffice on both sides.
fn kappa_locally_continuous(f: &SoftMap, k1: &SoftCotopology, k2: &SoftCotopology) -> Result<bool> {
    let sub = f.image_of_whole();
    for p in points(f.source()) {
        let fp = f.image_point(&p)?;
        let ns: Vec<SoftSet> = closed_excluding(k1, &p)?
            .iter()
            .map(|n| f.image(n))
            .collect::<Result<_>>()?;
        for m in closed_excluding(k2, &fp)? {
            let target = m.meet(&sub);
            if !ns.iter().any(|n| target.is_subset(n)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every closed `K ∌ f(p)` has `f⁻¹(K)` a remote neighborhood of `p`.
fn kappa_preimage_remote(f: &SoftMap, k1: &SoftCotopology, k2: &SoftCotopology) -> Result<bool> {
    for p in points(f.source()) {
        let fp = f.image_point(&p)?;
        for k in closed_excluding(k2, &fp)? {
            if !k1.is_remote_nbhd(&f.preimage(&k)?, &p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(T0, T1)` with the two points allowed different domains.
fn tau_mixed(t: &SoftTopology) -> Result<(bool, bool)> {
    let ctx = t.context();
    let pts = points(ctx);
    let opens = t.all_members()?;
    let sep = |x: &SoftPoint, y: &SoftPoint| opens.iter().any(|g| x.is_in(g) && !y.is_in(g));
    let (mut t0, mut t1) = (true, true);
    for x in &pts {
        for y in &pts {
            if x.point() >= y.point() {
                continue;
            }
            let (a, b) = (sep(x, y), sep(y, x));
            t0 &= a || b;
            t1 &= a && b;
        }
    }
    Ok((t0, t1))
}

fn kappa_mixed(k: &SoftCotopology) -> Result<(bool, bool)> {
    let ctx = k.context();
    let pts = points(ctx);
    let closed = k.all_members()?;
    let sep = |x: &SoftPoint, y: &SoftPoint| closed.iter().any(|c| !x.is_in(c) && y.is_in(c));
    let (mut t0, mut t1) = (true, true);
    for x in &pts {
        for y in &pts {
            if x.point() >= y.point() {
                continue;
            }
            let (a, b) = (sep(x, y), sep(y, x));
            t0 &= a || b;
            t1 &= a && b;
        }
    }
    Ok((t0, t1))
}

/// Strong remote neighborhood with `⊆̃` in place of the pointwise
/// condition: some closed `K ⊇̃ S` with `dom p ⊆ dom K` and `x ∉ K(e)` for
/// every `e ∈ dom K`.
fn strong_remote_subset_reading(k: &SoftCotopology, s: &SoftSet, p: &SoftPoint) -> Result<bool> {
    Ok(k.all_members()?.iter().any(|c| {
        s.is_subset(c)
            && p.domain().is_subset(c.domain())
            && c.entries().all(|(_, v)| !v.contains(p.point()))
    }))
}

/// `∩̃{K ∈ κ : dom K = A, x_A ∈̃ K}`, or `None` when no such `K` exists.
fn closed_point_hull(k: &SoftCotopology, p: &SoftPoint) -> Result<Option<SoftSet>> {
    let family: Vec<SoftSet> = k
        .closed_with_domain(p.domain())
        .into_iter()
        .filter(|c| p.is_in(c))
        .collect();
    if family.is_empty() {
        return Ok(None);
    }
    intersect(&family).map(Some)
}

fn slice_is_topology(
    slice: &std::collections::BTreeSet<crate::bits::PointSet>,
    all: crate::bits::PointSet,
) -> bool {
    slice.contains(&crate::bits::PointSet::EMPTY)
        && slice.contains(&all)
        && slice.iter().all(|a| {
            slice
                .iter()
                .all(|b| slice.contains(&a.union(*b)) && slice.contains(&a.intersection(*b)))
        })
}

pub fn properties() -> Vec<Property> {
    use Shape::*;
    vec![
        // soft set algebra
        law("demorgan-intersection", "(∩̃ Fᵢ)ᶜ ⊆̃ ∪̃ Fᵢᶜ", SetFamily, |i| {
            Ok(!intersect(&i.sets)?.complement().is_subset(&union(&complements(&i.sets))?))
        }),
        law("demorgan-union", "(∪̃ Fᵢ)ᶜ ⊇̃ ∩̃ Fᵢᶜ", SetFamily, |i| {
            Ok(!intersect(&complements(&i.sets))?.is_subset(&union(&i.sets)?.complement()))
        }),
        law("demorgan-equal-domains", "dom Fᵢ all equal ⟹ both De Morgan inclusions are equalities", SetFamily, |i| {
            let d = i.sets[0].domain();
            if i.sets.iter().any(|s| s.domain() != d) {
                return Ok(false);
            }
            let c = complements(&i.sets);
            Ok(intersect(&i.sets)?.complement() != union(&c)? || union(&i.sets)?.complement() != intersect(&c)?)
        }),
        claim("demorgan-intersection-strict", "(∩̃ Fᵢ)ᶜ ⊊̃ ∪̃ Fᵢᶜ for some family", SetFamily, |i| {
            Ok(intersect(&i.sets)?.complement() != union(&complements(&i.sets))?)
        }),
        claim("demorgan-union-strict", "(∪̃ Fᵢ)ᶜ ⊋̃ ∩̃ Fᵢᶜ for some family", SetFamily, |i| {
            Ok(intersect(&complements(&i.sets))? != union(&i.sets)?.complement())
        }),
        law("null-intersection", "φ_E ∩̃ F_A = φ_A", Sets(1), |i| {
            let (c, f) = (ctx_of(i), &i.sets[0]);
            Ok(SoftSet::null_all(c).meet(f) != null(c, f.domain()))
        }),
        law("null-union", "φ_E ∪̃ F_A = F_A", Sets(1), |i| {
            let (c, f) = (ctx_of(i), &i.sets[0]);
            Ok(SoftSet::null_all(c).join(f) != *f)
        })
        .note("the union has domain E and equals F_A padded with ∅ outside A"),
        law("whole-intersection", "Ũ_E ∩̃ F_A = F_A", Sets(1), |i| {
            let (c, f) = (ctx_of(i), &i.sets[0]);
            Ok(SoftSet::whole_all(c).meet(f) != *f)
        }),
        law("whole-union", "Ũ_E ∪̃ F_A = Ũ_A", Sets(1), |i| {
            let (c, f) = (ctx_of(i), &i.sets[0]);
            Ok(SoftSet::whole_all(c).join(f) != whole(c, f.domain()))
        })
        .note("the union has domain E and equals Ũ_E"),
        law("subset-iff-intersection", "F ⊆̃ G ⟺ F ∩̃ G = F", Sets(2), |i| {
            let (f, g) = (&i.sets[0], &i.sets[1]);
            Ok(f.is_subset(g) != (f.meet(g) == *f))
        }),
        law("subset-iff-union", "F ⊆̃ G ⟺ F ∪̃ G = G", Sets(2), |i| {
            let (f, g) = (&i.sets[0], &i.sets[1]);
            Ok(f.is_subset(g) != (f.join(g) == *g))
        }),
        law(
            "disjoint-complement",
            "A ⊆ B ∧ F_A ∩̃ G_B = φ_{A∩B} ⟹ F_A ⊆̃ G_Bᶜ; for A = B an equivalence",
            Sets(2),
            |i| {
                let (c, f, g) = (ctx_of(i), &i.sets[0], &i.sets[1]);
                let (a, b) = (f.domain(), g.domain());
                let disjoint = f.meet(g) == null(c, a.intersection(b));
                let inside = f.is_subset(&g.complement());
                Ok((a.is_subset(b) && disjoint && !inside) || (a == b && disjoint != inside))
            },
        ),
        law("complement-cover", "F_A ∪̃ F_Aᶜ = Ũ_A ∧ F_A ∩̃ F_Aᶜ = φ_A", Sets(1), |i| {
            let (c, f) = (ctx_of(i), &i.sets[0]);
            let fc = f.complement();
            Ok(f.join(&fc) != whole(c, f.domain()) || f.meet(&fc) != null(c, f.domain()))
        }),
        law("complement-antitone", "F_A ⊆̃ G_B ⟺ G_Bᶜ ⊆̃ F_Aᶜ", Sets(2), |i| {
            let (f, g) = (&i.sets[0], &i.sets[1]);
            Ok(f.is_subset(g) != g.complement().is_subset(&f.complement()))
        })
        .note("⊆̃ needs A ⊆ B on one side and B ⊆ A on the other, so the equivalence needs A = B"),
        law("complement-antitone-equal-domains", "F_A ⊆̃ G_A ⟺ G_Aᶜ ⊆̃ F_Aᶜ", Sets(2), |i| {
            let (f, g) = (&i.sets[0], &i.sets[1]);
            Ok(f.domain() == g.domain() && f.is_subset(g) != g.complement().is_subset(&f.complement()))
        }),
        law("subset-transitive", "F ⊆̃ G ∧ G ⊆̃ H ⟹ F ⊆̃ H", Sets(3), |i| {
            let (f, g, h) = (&i.sets[0], &i.sets[1], &i.sets[2]);
            Ok(f.is_subset(g) && g.is_subset(h) && !f.is_subset(h))
        }),
        law("intersection-monotone", "F ⊆̃ G ∧ H ⊆̃ S ⟹ F ∩̃ H ⊆̃ G ∩̃ S", Sets(4), |i| {
            let (f, g, h, s) = (&i.sets[0], &i.sets[1], &i.sets[2], &i.sets[3]);
            Ok(f.is_subset(g) && h.is_subset(s) && !f.meet(h).is_subset(&g.meet(s)))
        }),
        law("complement-disjoint", "F_A ⊆̃ G_Bᶜ ⟹ F_A ∩̃ G_B = φ_A", Sets(2), |i| {
            let (c, f, g) = (ctx_of(i), &i.sets[0], &i.sets[1]);
            Ok(f.is_subset(&g.complement()) && f.meet(g) != null(c, f.domain()))
        }),
        law("lattice-laws", "∪̃ and ∩̃ are idempotent, commutative and associative", Sets(3), |i| {
            let (f, g, h) = (&i.sets[0], &i.sets[1], &i.sets[2]);
            Ok(f.join(f) != *f
                || f.meet(f) != *f
                || f.join(g) != g.join(f)
                || f.meet(g) != g.meet(f)
                || f.join(g).join(h) != f.join(&g.join(h))
                || f.meet(g).meet(h) != f.meet(&g.meet(h)))
        }),
        law("point-exclusive", "¬(x_A ∈̃ F ∧ x_A ∈̃ Fᶜ)", Sets(1), |i| {
            let f = &i.sets[0];
            let fc = f.complement();
            Ok(points(f.context()).iter().any(|p| p.is_in(f) && p.is_in(&fc)))
        }),
        // soft maps
        law("image-null-whole", "f(φ_A) = φ_{ψ(A)} ∧ f(Ũ_E) ⊆̃ Ṽ_P", Map { src: 0, tgt: 0 }, |i| {
            let f = &i.maps[0];
            for a in f.source().all_params().subsets() {
                if f.image(&null(f.source(), a))? != null(f.target(), f.map_params(a)) {
                    return Ok(true);
                }
            }
            Ok(!f.image(&SoftSet::whole_all(f.source()))?.is_subset(&SoftSet::whole_all(f.target())))
        }),
        law("image-union", "f(F ∪̃ G) = f(F) ∪̃ f(G)", Map { src: 2, tgt: 0 }, |i| {
            let (f, a, b) = (&i.maps[0], &i.sets[0], &i.sets[1]);
            Ok(f.image(&a.join(b))? != f.image(a)?.join(&f.image(b)?))
        }),
        law("image-intersection", "f(F ∩̃ G) ⊆̃ f(F) ∩̃ f(G)", Map { src: 2, tgt: 0 }, |i| {
            let (f, a, b) = (&i.maps[0], &i.sets[0], &i.sets[1]);
            Ok(!f.image(&a.meet(b))?.is_subset(&f.image(a)?.meet(&f.image(b)?)))
        }),
        law("image-monotone", "F ⊆̃ G ⟹ f(F) ⊆̃ f(G)", Map { src: 2, tgt: 0 }, |i| {
            let (f, a, b) = (&i.maps[0], &i.sets[0], &i.sets[1]);
            Ok(a.is_subset(b) && !f.image(a)?.is_subset(&f.image(b)?))
        }),
        law("preimage-null-whole", "f⁻¹(φ_P) = φ_E ∧ f⁻¹(Ṽ_P) = Ũ_E", Map { src: 0, tgt: 0 }, |i| {
            let f = &i.maps[0];
            Ok(f.preimage(&SoftSet::null_all(f.target()))? != SoftSet::null_all(f.source())
                || f.preimage(&SoftSet::whole_all(f.target()))? != SoftSet::whole_all(f.source()))
        }),
        law("preimage-union", "f⁻¹(F ∪̃ G) = f⁻¹(F) ∪̃ f⁻¹(G)", Map { src: 0, tgt: 2 }, |i| {
            let (f, a, b) = (&i.maps[0], &i.sets[0], &i.sets[1]);
            Ok(f.preimage(&a.join(b))? != f.preimage(a)?.join(&f.preimage(b)?))
        }),
        law("preimage-intersection", "f⁻¹(F ∩̃ G) = f⁻¹(F) ∩̃ f⁻¹(G)", Map { src: 0, tgt: 2 }, |i| {
            let (f, a, b) = (&i.maps[0], &i.sets[0], &i.sets[1]);
            Ok(f.preimage(&a.meet(b))? != f.preimage(a)?.meet(&f.preimage(b)?))
        }),
        law("image-preimage", "f(f⁻¹(F)) ⊆̃ F", Map { src: 0, tgt: 1 }, |i| {
            let (f, a) = (&i.maps[0], &i.sets[0]);
            Ok(!f.image(&f.preimage(a)?)?.is_subset(a))
        }),
        law("image-preimage-exact", "f(f⁻¹(F)) = F ∩̃ f(Ũ_E)", Map { src: 0, tgt: 1 }, |i| {
            let (f, a) = (&i.maps[0], &i.sets[0]);
            Ok(f.image(&f.preimage(a)?)? != a.meet(&f.image_of_whole()))
        }),
        law("preimage-complement", "f⁻¹(Fᶜ) = f⁻¹(F)ᶜ", Map { src: 0, tgt: 1 }, |i| {
            let (f, a) = (&i.maps[0], &i.sets[0]);
            Ok(f.preimage(&a.complement())? != f.preimage(a)?.complement())
        }),
        law("preimage-image", "F ⊆̃ f⁻¹(f(F))", Map { src: 1, tgt: 0 }, |i| {
            let (f, a) = (&i.maps[0], &i.sets[0]);
            Ok(!a.is_subset(&f.preimage(&f.image(a)?)?))
        }),
        law("preimage-composition", "(g ∘ f)⁻¹(K) = f⁻¹(g⁻¹(K))", MapChain, |i| {
            let (f, g, k) = (&i.maps[0], &i.maps[1], &i.sets[0]);
            Ok(g.compose(f)?.preimage(k)? != f.preimage(&g.preimage(k)?)?)
        }),
        // soft topologies
        law("topology-intersection", "τ₁ ∩ τ₂ is a soft topology", TopoPair, |i| {
            Ok(tau(i, 0).intersection(tau(i, 1)).is_err())
        }),
        law("topology-slices", "(U, τ(e)) is a topological space for every e", Topo(0), |i| {
            let t = tau(i, 0);
            let all = t.context().all_points();
            for e in 0..t.context().n_params() {
                if !slice_is_topology(&t.slice_at_parameter(e)?, all) {
                    return Ok(true);
                }
            }
            Ok(false)
        }),
        law(
            "interior-basics",
            "int F ⊆̃ F, int F is the largest open set inside F, F open ⟺ int F = F, int int F = int F",
            Topo(1),
            |i| {
                let (t, f) = (tau(i, 0), &i.sets[0]);
                let int = t.interior(f)?;
                if !int.is_subset(f) || !t.is_open(&int) || t.interior(&int)? != int || t.is_open(f) != (int == *f) {
                    return Ok(true);
                }
                Ok(t.all_members()?.iter().any(|g| g.is_subset(f) && !g.is_subset(&int)))
            },
        ),
        law("interior-null-whole", "int φ_A = φ_A ∧ int Ũ_E = Ũ_E", Topo(0), |i| {
            let t = tau(i, 0);
            let c = t.context();
            for a in c.all_params().subsets() {
                if t.interior(&null(c, a))? != null(c, a) {
                    return Ok(true);
                }
            }
            Ok(t.interior(&SoftSet::whole_all(c))? != SoftSet::whole_all(c))
        }),
        law("interior-monotone", "F ⊆̃ G ⟹ int F ⊆̃ int G", Topo(2), |i| {
            let (t, f, g) = (tau(i, 0), &i.sets[0], &i.sets[1]);
            Ok(f.is_subset(g) && !t.interior(f)?.is_subset(&t.interior(g)?))
        }),
        law("interior-intersection", "int(F ∩̃ G) = int F ∩̃ int G", Topo(2), |i| {
            let (t, f, g) = (tau(i, 0), &i.sets[0], &i.sets[1]);
            Ok(t.interior(&f.meet(g))? != t.interior(f)?.meet(&t.interior(g)?))
        }),
        law("interior-union", "int(F ∪̃ G) ⊇̃ int F ∪̃ int G", Topo(2), |i| {
            let (t, f, g) = (tau(i, 0), &i.sets[0], &i.sets[1]);
            Ok(!t.interior(f)?.join(&t.interior(g)?).is_subset(&t.interior(&f.join(g))?))
        }),
        claim("interior-union-strict", "int(F ∪̃ G) ≠ int F ∪̃ int G for some τ, F, G", Topo(2), |i| {
            let (t, f, g) = (tau(i, 0), &i.sets[0], &i.sets[1]);
            Ok(t.interior(f)?.join(&t.interior(g)?) != t.interior(&f.join(g))?)
        }),
        law("nbhd-upward", "Ũ_E ∈ 𝔑(x_A) ∧ (G ∈ 𝔑(x_A) ∧ G ⊆̃ H ⟹ H ∈ 𝔑(x_A))", Topo(2), |i| {
            let (t, g, h) = (tau(i, 0), &i.sets[0], &i.sets[1]);
            let w = SoftSet::whole_all(t.context());
            Ok(points(t.context())
                .iter()
                .any(|p| !t.is_nbhd_of_point(&w, p) || (t.is_nbhd_of_point(g, p) && g.is_subset(h) && !t.is_nbhd_of_point(h, p))))
        }),
        law("identity-continuity", "id: (Ũ_E, τ₁) → (Ũ_E, τ₂) τ-continuous ⟺ τ₂ ⊆ τ₁", TopoPair, |i| {
            let (t1, t2) = (tau(i, 0), tau(i, 1));
            Ok(is_tau_continuous(&SoftMap::identity(t1.context()), t1, t2)? != t1.includes(t2))
        }),
        law(
            "tau-continuity-pointwise",
            "f⁻¹(G) open ∀ G ∈ τ₂ ⟺ f⁻¹(G) ∈ 𝔑(x_A) for every open G ∋ f(x_A)",
            MapTopo,
            |i| {
                let (f, t1, t2) = (&i.maps[0], tau(i, 0), tau(i, 1));
                Ok(is_tau_continuous(f, t1, t2)? != tau_preimage_nbhds(f, t1, t2)?)
            },
        ),
        reading(
            "reading-tau-continuity-local",
            "∀ open G ∋ f(x_A) ∃ H ∈ 𝔑(x_A): f(H) ⊆̃ G, against the preimage criterion",
            MapTopo,
            |i| {
                let (f, t1, t2) = (&i.maps[0], tau(i, 0), tau(i, 1));
                Ok(is_tau_continuous(f, t1, t2)? != tau_locally_continuous(f, t1, t2)?)
            },
        ),
        law("tau-continuity-composition", "f, g τ-continuous ⟹ g ∘ f τ-continuous", MapChainTopo, |i| {
            let (f, g) = (&i.maps[0], &i.maps[1]);
            let (t1, t2, t3) = (tau(i, 0), tau(i, 1), tau(i, 2));
            Ok(is_tau_continuous(f, t1, t2)? && is_tau_continuous(g, t2, t3)? && !is_tau_continuous(&g.compose(f)?, t1, t3)?)
        }),
        law("tau-continuity-interior", "f τ-continuous ⟺ f⁻¹(int F) ⊆̃ int f⁻¹(F) ∀ F", MapTopo, |i| {
            let (f, t1, t2) = (&i.maps[0], tau(i, 0), tau(i, 1));
            let mut all = true;
            for s in every_set(f.target())? {
                if !f.preimage(&t2.interior(&s)?)?.is_subset(&t1.interior(&f.preimage(&s)?)?) {
                    all = false;
                    break;
                }
            }
            Ok(is_tau_continuous(f, t1, t2)? != all)
        }),
        law("open-map-interior", "f open ⟺ f(int F) ⊆̃ int f(F) ∀ F", MapTopo, |i| {
            let (f, t1, t2) = (&i.maps[0], tau(i, 0), tau(i, 1));
            let mut all = true;
            for s in every_set(f.source())? {
                if !f.image(&t1.interior(&s)?)?.is_subset(&t2.interior(&f.image(&s)?)?) {
                    all = false;
                    break;
                }
            }
            Ok(is_open_map(f, t1, t2)? != all)
        }),
        law("open-map-composition", "f, g open ⟹ g ∘ f open", MapChainTopo, |i| {
            let (f, g) = (&i.maps[0], &i.maps[1]);
            let (t1, t2, t3) = (tau(i, 0), tau(i, 1), tau(i, 2));
            Ok(is_open_map(f, t1, t2)? && is_open_map(g, t2, t3)? && !is_open_map(&g.compose(f)?, t1, t3)?)
        }),
        law("tau-point-complements-T1", "x_Aᶜ ∈ τ ∀ x, A ⟹ τ-T1", Topo(0), |i| {
            let t = tau(i, 0);
            let all_open = points(t.context()).iter().all(|p| t.is_open(&p.to_soft_set().complement()));
            Ok(all_open && !holds(t, Axiom::T1)?)
        }),
        law(
            "tau-implications",
            "τ: T2 ⟹ T1 ⟹ T0, T3 ⟺ regular ∧ T1, T4 ⟺ normal ∧ T1",
            Topo(0),
            |i| {
                let t = tau(i, 0);
                let h = |a| holds(t, a);
                let (t0, t1, t2) = (h(Axiom::T0)?, h(Axiom::T1)?, h(Axiom::T2)?);
                let (reg, t3, nor, t4) = (h(Axiom::Regular)?, h(Axiom::T3)?, h(Axiom::Normal)?, h(Axiom::T4)?);
                Ok((t2 && !t1) || (t1 && !t0) || t3 != (reg && t1) || t4 != (nor && t1))
            },
        ),
        claim("tau-T0-not-T1", "some τ is T0 and not T1", Topo(0), |i| {
            let t = tau(i, 0);
            Ok(holds(t, Axiom::T0)? && !holds(t, Axiom::T1)?)
        }),
        claim("tau-T1-not-T2", "some τ is T1 and not T2", Topo(0), |i| {
            let t = tau(i, 0);
            Ok(holds(t, Axiom::T1)? && !holds(t, Axiom::T2)?)
        })
        .floor(2, 2),
        claim("tau-regular-not-T1", "some τ is regular and not T1", Topo(0), |i| {
            let t = tau(i, 0);
            Ok(holds(t, Axiom::Regular)? && !holds(t, Axiom::T1)?)
        }),
        law(
            "tau-T2-injective-pullback",
            "f injective, τ-continuous, (Ṽ_P, τ₂) T2 ⟹ (Ũ_E, τ₁) T2",
            MapTopo,
            |i| {
                let (f, t1, t2) = (&i.maps[0], tau(i, 0), tau(i, 1));
                Ok(f.is_injective() && is_tau_continuous(f, t1, t2)? && holds(t2, Axiom::T2)? && !holds(t1, Axiom::T2)?)
            },
        ),
        law(
            "tau-T2-bijective-open-pushforward",
            "f bijective, open, (Ũ_E, τ₁) T2 ⟹ (Ṽ_P, τ₂) T2",
            MapTopo,
            |i| {
                let (f, t1, t2) = (&i.maps[0], tau(i, 0), tau(i, 1));
                Ok(f.is_injective()
                    && f.is_surjective()
                    && is_open_map(f, t1, t2)?
                    && holds(t1, Axiom::T2)?
                    && !holds(t2, Axiom::T2)?)
            },
        ),
        reading(
            "reading-tau-mixed-domain",
            "τ-T0 and τ-T1 over pairs x_A, y_A against pairs x_A, y_B",
            Topo(0),
            |i| {
                let t = tau(i, 0);
                Ok((holds(t, Axiom::T0)?, holds(t, Axiom::T1)?) != tau_mixed(t)?)
            },
        ),
        // soft cotopologies
        law("cotopology-intersection", "κ₁ ∩ κ₂ is a soft cotopology", CotopoPair, |i| {
            Ok(kappa(i, 0).intersection(kappa(i, 1)).is_err())
        }),
        law("cotopology-slices", "(U, κ(e)) is a cotopological space for every e", Cotopo(0), |i| {
            let k = kappa(i, 0);
            let all = k.context().all_points();
            for e in 0..k.context().n_params() {
                if !slice_is_topology(&k.slice_at_parameter(e)?, all) {
                    return Ok(true);
                }
            }
            Ok(false)
        }),
        law(
            "closure-basics",
            "F ⊆̃ cl F, cl F closed, cl cl F = cl F, F closed ⟺ cl F = F",
            Cotopo(1),
            |i| {
                let (k, f) = (kappa(i, 0), &i.sets[0]);
                let cl = k.closure(f)?;
                Ok(!f.is_subset(&cl) || !k.is_closed(&cl) || k.closure(&cl)? != cl || k.is_closed(f) != (cl == *f))
            },
        ),
        law("closure-null-whole", "cl φ_A = φ_A ∧ cl Ũ_E = Ũ_E", Cotopo(0), |i| {
            let k = kappa(i, 0);
            let c = k.context();
            for a in c.all_params().subsets() {
                if k.closure(&null(c, a))? != null(c, a) {
                    return Ok(true);
                }
            }
            Ok(k.closure(&SoftSet::whole_all(c))? != SoftSet::whole_all(c))
        }),
        law("closure-monotone", "F ⊆̃ G ⟹ cl F ⊆̃ cl G", Cotopo(2), |i| {
            let (k, f, g) = (kappa(i, 0), &i.sets[0], &i.sets[1]);
            Ok(f.is_subset(g) && !k.closure(f)?.is_subset(&k.closure(g)?))
        }),
        law("closure-union", "cl(F ∪̃ G) = cl F ∪̃ cl G", Cotopo(2), |i| {
            let (k, f, g) = (kappa(i, 0), &i.sets[0], &i.sets[1]);
            Ok(k.closure(&f.join(g))? != k.closure(f)?.join(&k.closure(g)?))
        }),
        law("closure-intersection", "cl(F ∩̃ G) ⊆̃ cl F ∩̃ cl G", Cotopo(2), |i| {
            let (k, f, g) = (kappa(i, 0), &i.sets[0], &i.sets[1]);
            Ok(!k.closure(&f.meet(g))?.is_subset(&k.closure(f)?.meet(&k.closure(g)?)))
        }),
        claim("closure-intersection-strict", "cl(F ∩̃ G) ≠ cl F ∩̃ cl G for some κ, F, G", Cotopo(2), |i| {
            let (k, f, g) = (kappa(i, 0), &i.sets[0], &i.sets[1]);
            Ok(k.closure(&f.meet(g))? != k.closure(f)?.meet(&k.closure(g)?))
        }),
        law(
            "closure-adherence",
            "dom cl F = A ⟹ {x : x_A ∈̃ cl F} = {x : x_A adherent to F}",
            Cotopo(1),
            |i| {
                let (k, f) = (kappa(i, 0), &i.sets[0]);
                let a = f.domain();
                let cl = k.closure(f)?;
                if a.is_empty() || cl.domain() != a {
                    return Ok(false);
                }
                let mut by_closure: Vec<usize> =
                    SoftPoint::all_at(f.context(), a).filter(|p| p.is_in(&cl)).map(|p| p.point()).collect();
                let mut by_adherence: Vec<usize> = k.adherence_points(f)?.iter().map(SoftPoint::point).collect();
                by_closure.sort_unstable();
                by_adherence.sort_unstable();
                Ok(by_closure != by_adherence)
            },
        )
        .tally("closure domain strictly exceeds dom F", |i| {
            let (k, f) = (kappa(i, 0), &i.sets[0]);
            Ok(k.closure(f)?.domain() != f.domain())
        }),
        law("closure-accumulation", "cl F = F ∪̃ F′", Cotopo(1), |i| {
            let (k, f) = (kappa(i, 0), &i.sets[0]);
            Ok(k.closure(f)? != f.join(&k.accumulation(f)?))
        })
        .note("fails when a point lies in F on some but not all parameters of A; F′ then misses it"),
        law("closed-iff-accumulation", "F closed ⟺ F′ ⊆̃ F", Cotopo(1), |i| {
            let (k, f) = (kappa(i, 0), &i.sets[0]);
            Ok(k.is_closed(f) != k.accumulation(f)?.is_subset(f))
        }),
        law("accumulation-adherence", "x_A ∈̃ F′ ⟹ x_A adherent to F", Cotopo(1), |i| {
            let (k, f) = (kappa(i, 0), &i.sets[0]);
            let acc = k.accumulation(f)?;
            let adherent: Vec<usize> = k.adherence_points(f)?.iter().map(SoftPoint::point).collect();
            Ok(!f.domain().is_empty()
                && SoftPoint::all_at(f.context(), f.domain()).any(|p| p.is_in(&acc) && !adherent.contains(&p.point())))
        }),
        law(
            "remote-closed-criterion",
            "F closed ⟺ F ∈ ℜ(x_A) for every x_A ∉̃ F with A ⊆ dom F",
            Cotopo(1),
            |i| {
                let (k, f) = (kappa(i, 0), &i.sets[0]);
                let remote_everywhere = f
                    .domain()
                    .subsets()
                    .filter(|a| !a.is_empty())
                    .flat_map(|a| SoftPoint::all_at(f.context(), a))
                    .filter(|p| !p.is_in(f))
                    .all(|p| k.is_remote_nbhd(f, &p));
                Ok(k.is_closed(f) != remote_everywhere)
            },
        ),
        law(
            "kappa-continuity-induced",
            "f: κ_U → κ_V κ-continuous ⟺ f: κ_U → κ_V′ κ-continuous, κ_V′ induced on f(Ũ_E)",
            MapCotopo,
            |i| {
                let (f, k1, k2) = (&i.maps[0], kappa(i, 0), kappa(i, 1));
                Ok(is_kappa_continuous(f, k1, k2)? != is_kappa_continuous(f, k1, &f.restrict_to_image(k2)?)?)
            },
        ),
        law(
            "kappa-continuity-remote",
            "f κ-continuous ⟹ f⁻¹(M) ∈ ℜ(x_A) for every M ∈ ℜ(f(x_A))",
            MapCotopo,
            |i| {
                let (f, k1, k2) = (&i.maps[0], kappa(i, 0), kappa(i, 1));
                Ok(is_kappa_continuous(f, k1, k2)? && !kappa_preimage_remote(f, k1, k2)?)
            },
        ),
        reading(
            "reading-kappa-continuity-local",
            "∀ M ∈ ℜ(f(x_A)) ∃ N ∈ ℜ(x_A): f(N) ⊇̃ M ∩̃ f(Ũ_E), against the preimage criterion",
            MapCotopo,
            |i| {
                let (f, k1, k2) = (&i.maps[0], kappa(i, 0), kappa(i, 1));
                Ok(is_kappa_continuous(f, k1, k2)? != kappa_locally_continuous(f, k1, k2)?)
            },
        ),
        law("kappa-continuity-composition", "f, g κ-continuous ⟹ g ∘ f κ-continuous", MapChainCotopo, |i| {
            let (f, g) = (&i.maps[0], &i.maps[1]);
            let (k1, k2, k3) = (kappa(i, 0), kappa(i, 1), kappa(i, 2));
            Ok(is_kappa_continuous(f, k1, k2)?
                && is_kappa_continuous(g, k2, k3)?
                && !is_kappa_continuous(&g.compose(f)?, k1, k3)?)
        }),
        law("closed-map-closure", "f closed ⟺ cl f(F) ⊆̃ f(cl F) ∀ F", MapCotopo, |i| {
            let (f, k1, k2) = (&i.maps[0], kappa(i, 0), kappa(i, 1));
            let mut all = true;
            for s in every_set(f.source())? {
                if !k2.closure(&f.image(&s)?)?.is_subset(&f.image(&k1.closure(&s)?)?) {
                    all = false;
                    break;
                }
            }
            Ok(is_closed_map(f, k1, k2)? != all)
        }),
        law("kappa-T0-closure", "κ-T0 ⟺ cl x_A ≠ cl y_A for all x ≠ y", Cotopo(0), |i| {
            let k = kappa(i, 0);
            let c = k.context();
            let mut distinct = true;
            for a in c.all_params().subsets().filter(|a| !a.is_empty()) {
                let cls: Vec<SoftSet> =
                    SoftPoint::all_at(c, a).map(|p| k.closure(&p.to_soft_set())).collect::<Result<_>>()?;
                for (x, cx) in cls.iter().enumerate() {
                    distinct &= cls[x + 1..].iter().all(|cy| cx != cy);
                }
            }
            Ok(kholds(k, Axiom::T0)? != distinct)
        }),
        law("kappa-T1-points-closed", "κ-T1 ⟺ every x_A is closed", Cotopo(0), |i| {
            let k = kappa(i, 0);
            let closed = points(k.context()).iter().all(|p| k.is_closed(&p.to_soft_set()));
            Ok(kholds(k, Axiom::T1)? != closed)
        }),
        law(
            "kappa-T2-point-hull",
            "κ-T2 ⟹ x_A = ∩̃{K_A ∈ κ : x_A ∈̃ K_A}",
            Cotopo(0),
            |i| {
                let k = kappa(i, 0);
                if !kholds(k, Axiom::T2)? {
                    return Ok(false);
                }
                for p in points(k.context()) {
                    if closed_point_hull(k, &p)? != Some(p.to_soft_set()) {
                        return Ok(true);
                    }
                }
                Ok(false)
            },
        )
        .note("K_A ranges over closed sets with domain exactly A"),
        law("kappa-point-hull-T0", "x_A = ∩̃{K_A ∈ κ : x_A ∈̃ K_A} ∀ x, A ⟹ κ-T0", Cotopo(0), |i| {
            let k = kappa(i, 0);
            for p in points(k.context()) {
                if closed_point_hull(k, &p)? != Some(p.to_soft_set()) {
                    return Ok(false);
                }
            }
            Ok(!kholds(k, Axiom::T0)?)
        }),
        law(
            "kappa-regular-remote-extension",
            "κ regular ⟹ ∀ M_A ∈ ℜ(x_A) ∃ L_A ∈ ℜ(x_A): M_A ⊆̃ L_A",
            Cotopo(0),
            |i| {
                let k = kappa(i, 0);
                if !kholds(k, Axiom::Regular)? {
                    return Ok(false);
                }
                for p in points(k.context()) {
                    for m in k.closed_with_domain(p.domain()).into_iter().filter(|m| !p.is_in(m)) {
                        if !k.is_remote_nbhd(&m, &p) {
                            return Ok(true);
                        }
                    }
                }
                Ok(false)
            },
        )
        .note("holds with L_A = M_A"),
        law(
            "kappa-implications",
            "κ: T2 ⟹ T1 ⟹ T0, T3 ⟹ T2, T3 ⟺ regular ∧ T1, T4 ⟺ normal ∧ T1",
            Cotopo(0),
            |i| {
                let k = kappa(i, 0);
                let h = |a| kholds(k, a);
                let (t0, t1, t2) = (h(Axiom::T0)?, h(Axiom::T1)?, h(Axiom::T2)?);
                let (reg, t3, nor, t4) = (h(Axiom::Regular)?, h(Axiom::T3)?, h(Axiom::Normal)?, h(Axiom::T4)?);
                Ok((t2 && !t1) || (t1 && !t0) || (t3 && !t2) || t3 != (reg && t1) || t4 != (nor && t1))
            },
        ),
        claim("kappa-T0-not-T1", "some κ is T0 and not T1", Cotopo(0), |i| {
            let k = kappa(i, 0);
            Ok(kholds(k, Axiom::T0)? && !kholds(k, Axiom::T1)?)
        }),
        claim("kappa-T1-not-T2", "some κ is T1 and not T2", Cotopo(0), |i| {
            let k = kappa(i, 0);
            Ok(kholds(k, Axiom::T1)? && !kholds(k, Axiom::T2)?)
        })
        .floor(2, 2),
        claim("kappa-regular-not-T1", "some κ is regular and not T1", Cotopo(0), |i| {
            let k = kappa(i, 0);
            Ok(kholds(k, Axiom::Regular)? && !kholds(k, Axiom::T1)?)
        }),
        law(
            "kappa-T2-injective-pullback",
            "f injective, κ-continuous, (Ṽ_P, κ₂) T2 ⟹ (Ũ_E, κ₁) T2",
            MapCotopo,
            |i| {
                let (f, k1, k2) = (&i.maps[0], kappa(i, 0), kappa(i, 1));
                Ok(f.is_injective() && is_kappa_continuous(f, k1, k2)? && kholds(k2, Axiom::T2)? && !kholds(k1, Axiom::T2)?)
            },
        ),
        law(
            "strong-remote-implies-remote",
            "S strong remote neighborhood of x_A ⟹ S ∈ ℜ(x_A)",
            Cotopo(1),
            |i| {
                let (k, s) = (kappa(i, 0), &i.sets[0]);
                Ok(points(k.context()).iter().any(|p| k.is_strong_remote_nbhd(s, p) && !k.is_remote_nbhd(s, p)))
            },
        ),
        reading(
            "reading-strong-remote",
            "x ∉ K_C(e) ⊇ S_B(e) ∀ e ∈ C, against S_B ⊆̃ K_C with x ∉ K_C(e) ∀ e ∈ C",
            Cotopo(1),
            |i| {
                let (k, s) = (kappa(i, 0), &i.sets[0]);
                for p in points(k.context()) {
                    if k.is_strong_remote_nbhd(s, &p) != strong_remote_subset_reading(k, s, &p)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            },
        ),
        reading(
            "reading-kappa-mixed-domain",
            "κ-T0 and κ-T1 over pairs x_A, y_A against pairs x_A, y_B",
            Cotopo(0),
            |i| {
                let k = kappa(i, 0);
                Ok((kholds(k, Axiom::T0)?, kholds(k, Axiom::T1)?) != kappa_mixed(k)?)
            },
        ),
        // soft ditopologies
        law("dito-axiom-conjunction", "δ-X ⟺ τ-X ∧ κ-X for every axiom X", Dito(0), |i| {
            let d = dito(i, 0)?;
            for a in Axiom::ALL {
                if d.check_axiom(a, ALL)?.holds != (holds(d.tau(), a)? && kholds(d.kappa(), a)?) {
                    return Ok(true);
                }
            }
            Ok(false)
        }),
        law(
            "dito-continuity-components",
            "f δ-continuous ⟺ f⁻¹ maps τ₂ into τ₁ and κ₂′ into κ₁",
            MapDito,
            |i| {
                let (f, d1, d2) = (&i.maps[0], dito(i, 0)?, dito(i, 1)?);
                let parts = is_tau_continuous(f, d1.tau(), d2.tau())?
                    && is_kappa_continuous(f, d1.kappa(), &f.restrict_to_image(d2.kappa())?)?;
                Ok(is_dito_continuous(f, &d1, &d2)? != parts)
            },
        ),
        law(
            "dito-continuity-pointwise",
            "f δ-continuous ⟺ (f⁻¹(F), f⁻¹(M)) is a neighborhood pair of x_A for every neighborhood pair (F, M) of f(x_A)",
            MapDito,
            |i| {
                let (f, d1, d2) = (&i.maps[0], dito(i, 0)?, dito(i, 1)?);
                let pointwise = tau_preimage_nbhds(f, d1.tau(), d2.tau())? && kappa_preimage_remote(f, d1.kappa(), d2.kappa())?;
                Ok(is_dito_continuous(f, &d1, &d2)? != pointwise)
            },
        ),
        law("dito-point-criterion-T1", "x_Aᶜ ∈ τ ∧ x_A ∈ κ ∀ x, A ⟹ δ-T1", Dito(0), |i| {
            let d = dito(i, 0)?;
            let crit = points(d.context())
                .iter()
                .all(|p| d.tau().is_open(&p.to_soft_set().complement()) && d.kappa().is_closed(&p.to_soft_set()));
            Ok(crit && !d.check_axiom(Axiom::T1, ALL)?.holds)
        }),
        law("dito-implications", "δ: T2 ⟹ T1 ⟹ T0", Dito(0), |i| {
            let d = dito(i, 0)?;
            let h = |a| -> Result<bool> { Ok(d.check_axiom(a, ALL)?.holds) };
            let (t0, t1, t2) = (h(Axiom::T0)?, h(Axiom::T1)?, h(Axiom::T2)?);
            Ok((t2 && !t1) || (t1 && !t0))
        }),
        claim("dito-T0-not-T1", "some δ is T0 and not T1", Dito(0), |i| {
            let d = dito(i, 0)?;
            Ok(d.check_axiom(Axiom::T0, ALL)?.holds && !d.check_axiom(Axiom::T1, ALL)?.holds)
        }),
        law(
            "dito-T2-injective-pullback",
            "f injective, δ-continuous, (Ṽ_P, δ₂) T2 ⟹ (Ũ_E, δ₁) T2",
            MapDito,
            |i| {
                let (f, d1, d2) = (&i.maps[0], dito(i, 0)?, dito(i, 1)?);
                Ok(f.is_injective()
                    && is_dito_continuous(f, &d1, &d2)?
                    && d2.check_axiom(Axiom::T2, ALL)?.holds
                    && !d1.check_axiom(Axiom::T2, ALL)?.holds)
            },
        ),
        claim("closure-interior-nonduality", "(cl F)ᶜ ≠ int(Fᶜ) for some δ, F", Dito(1), |i| {
            let (d, f) = (dito(i, 0)?, &i.sets[0]);
            Ok(d.closure(f)?.complement() != d.interior(&f.complement())?)
        }),
        claim("interior-closure-nonduality", "(int F)ᶜ ≠ cl(Fᶜ) for some δ, F", Dito(1), |i| {
            let (d, f) = (dito(i, 0)?, &i.sets[0]);
            Ok(d.interior(f)?.complement() != d.closure(&f.complement())?)
        }),
    ]
}
