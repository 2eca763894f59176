//! A literal model used as an independent oracle. Soft sets are ordered maps
//! from parameter indices to ordered point sets, and every operation is
//! written straight from its set-builder definition, without bitmasks,
//! cores or paddings.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use softdito::{Context, ParamSet, PointSet, SoftMap, SoftSet};

pub type Lit = BTreeMap<usize, BTreeSet<usize>>;

#[derive(Clone, Debug)]
pub struct Space {
    pub u: usize,
    pub e: usize,
}

impl Space {
    pub fn of(ctx: &Arc<Context>) -> Space {
        Space {
            u: ctx.n_points(),
            e: ctx.n_params(),
        }
    }

    pub fn universe(&self) -> BTreeSet<usize> {
        (0..self.u).collect()
    }

    /// Every soft set: a domain `A ⊆ E` and a value in `2^U` per `e ∈ A`.
    pub fn all_sets(&self) -> Vec<Lit> {
        let mut out = vec![Lit::new()];
        for e in 0..self.e {
            let mut next = Vec::new();
            for s in &out {
                next.push(s.clone());
                for mask in 0..(1usize << self.u) {
                    let mut t = s.clone();
                    t.insert(e, (0..self.u).filter(|x| mask >> x & 1 == 1).collect());
                    next.push(t);
                }
            }
            out = next;
        }
        out
    }

    pub fn null(&self, a: &BTreeSet<usize>) -> Lit {
        a.iter().map(|&e| (e, BTreeSet::new())).collect()
    }

    pub fn whole(&self, a: &BTreeSet<usize>) -> Lit {
        a.iter().map(|&e| (e, self.universe())).collect()
    }

    pub fn params(&self) -> BTreeSet<usize> {
        (0..self.e).collect()
    }

    pub fn domains(&self) -> Vec<BTreeSet<usize>> {
        (0..1usize << self.e)
            .map(|m| (0..self.e).filter(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    pub fn complement(&self, f: &Lit) -> Lit {
        f.iter()
            .map(|(&e, v)| (e, self.universe().difference(v).copied().collect()))
            .collect()
    }

    /// Soft points `x_A` for non-empty `A`.
    pub fn points(&self) -> Vec<(usize, BTreeSet<usize>)> {
        let mut out = Vec::new();
        for a in self.domains().into_iter().filter(|a| !a.is_empty()) {
            for x in 0..self.u {
                out.push((x, a.clone()));
            }
        }
        out
    }
}

pub fn union(f: &Lit, g: &Lit) -> Lit {
    let mut out = Lit::new();
    for e in f.keys().chain(g.keys()) {
        let v: BTreeSet<usize> = match (f.get(e), g.get(e)) {
            (Some(a), Some(b)) => a.union(b).copied().collect(),
            (Some(a), None) | (None, Some(a)) => a.clone(),
            (None, None) => unreachable!(),
        };
        out.insert(*e, v);
    }
    out
}

pub fn intersection(f: &Lit, g: &Lit) -> Lit {
    f.iter()
        .filter_map(|(e, a)| g.get(e).map(|b| (*e, a.intersection(b).copied().collect())))
        .collect()
}

pub fn subset(f: &Lit, g: &Lit) -> bool {
    f.iter()
        .all(|(e, a)| g.get(e).is_some_and(|b| a.is_subset(b)))
}

pub fn point_in(x: usize, a: &BTreeSet<usize>, f: &Lit) -> bool {
    a.iter().all(|e| f.get(e).is_some_and(|v| v.contains(&x)))
}

pub fn point_set(x: usize, a: &BTreeSet<usize>) -> Lit {
    a.iter().map(|&e| (e, BTreeSet::from([x]))).collect()
}

/// `f(F)(p) = φ(∪{F(e) : e ∈ A, ψ(e) = p})` for `p ∈ ψ(A)`.
pub fn image(phi: &[usize], psi: &[usize], f: &Lit) -> Lit {
    let mut out = Lit::new();
    for (&e, v) in f {
        let slot = out.entry(psi[e]).or_default();
        slot.extend(v.iter().map(|&x| phi[x]));
    }
    out
}

/// `f⁻¹(G)(e) = φ⁻¹(G(ψ(e)))` for `e ∈ ψ⁻¹(B)`.
pub fn preimage(phi: &[usize], psi: &[usize], g: &Lit) -> Lit {
    let mut out = Lit::new();
    for (e, &p) in psi.iter().enumerate() {
        if let Some(v) = g.get(&p) {
            out.insert(e, (0..phi.len()).filter(|x| v.contains(&phi[*x])).collect());
        }
    }
    out
}

pub fn to_lit(s: &SoftSet) -> Lit {
    s.entries().map(|(e, v)| (e, v.iter().collect())).collect()
}

pub fn from_lit(ctx: &Arc<Context>, f: &Lit) -> SoftSet {
    let domain = ParamSet::from_indices(f.keys().copied());
    SoftSet::new(ctx, domain, |e| {
        PointSet::from_indices(f[&e].iter().copied())
    })
    .unwrap()
}

pub fn map_tables(f: &SoftMap) -> (Vec<usize>, Vec<usize>) {
    (f.phi().to_vec(), f.psi().to_vec())
}

/// The family generated by `listed`: the null sets `φ_A` for every `A`,
/// `Ũ_E` and `listed`, closed under pairwise union and intersection. The
/// structure is finite, so pairwise closure gives arbitrary unions.
pub fn close(space: &Space, listed: &[Lit]) -> BTreeSet<Lit> {
    let mut fam: BTreeSet<Lit> = listed.iter().cloned().collect();
    for a in space.domains() {
        fam.insert(space.null(&a));
    }
    fam.insert(space.whole(&space.params()));
    loop {
        let items: Vec<Lit> = fam.iter().cloned().collect();
        let mut grew = false;
        for f in &items {
            for g in &items {
                grew |= fam.insert(union(f, g));
                grew |= fam.insert(intersection(f, g));
            }
        }
        if !grew {
            return fam;
        }
    }
}

pub fn is_closed_family(space: &Space, listed: &[Lit]) -> bool {
    let fam: BTreeSet<Lit> = listed.iter().cloned().collect();
    close(space, listed).iter().all(|f| {
        fam.contains(f)
            || f.values().all(BTreeSet::is_empty)
            || *f == space.whole(&space.params())
            || listed
                .iter()
                .any(|g| union(g, &space.null(&f.keys().copied().collect())) == *f)
    })
}

/// `int F`: the union of every open set contained in `F`.
pub fn interior(opens: &BTreeSet<Lit>, f: &Lit) -> Lit {
    opens
        .iter()
        .filter(|g| subset(g, f))
        .fold(Lit::new(), |acc, g| union(&acc, g))
}

/// `cl F`: the intersection of every closed set containing `F`.
pub fn closure(space: &Space, closed: &BTreeSet<Lit>, f: &Lit) -> Lit {
    closed
        .iter()
        .filter(|k| subset(f, k))
        .fold(space.whole(&space.params()), |acc, k| intersection(&acc, k))
}

/// `M` is a remote neighborhood of `x_A`: some closed `K ⊇̃ M` has `x_A ∉̃ K`.
pub fn remote(closed: &BTreeSet<Lit>, m: &Lit, x: usize, a: &BTreeSet<usize>) -> bool {
    closed.iter().any(|k| subset(m, k) && !point_in(x, a, k))
}

/// Points `x` with `x_A` adherent to `F_A`: no remote neighborhood `M_A`
/// of `x_A` has `M_A ∪̃ F_Aᶜ = Ũ_A`.
pub fn adherence(space: &Space, closed: &BTreeSet<Lit>, f: &Lit) -> BTreeSet<usize> {
    let a: BTreeSet<usize> = f.keys().copied().collect();
    if a.is_empty() {
        return BTreeSet::new();
    }
    let whole_a = space.whole(&a);
    let fc = space.complement(f);
    let with_domain_a: Vec<Lit> = space
        .all_sets()
        .into_iter()
        .filter(|m| m.keys().copied().collect::<BTreeSet<_>>() == a)
        .collect();
    (0..space.u)
        .filter(|&x| {
            !with_domain_a
                .iter()
                .any(|m| remote(closed, m, x, &a) && union(m, &fc) == whole_a)
        })
        .collect()
}
