//! Degrees in `H_2(G/P)`, maximal roots, greedy decompositions, `z_d^P`, and
//! the cosmall / small classifications.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{internal, usage, Result};
use crate::hecke::hecke_mul;
use crate::rootsys::{root_leq, Root, RootSystem};
use crate::weyl::{Coset, Parabolic, WeylElt};

/// An element of `ZΔ^∨ / ZΔ_P^∨`, kept as its coordinates on `Δ ∖ Δ_P`
/// in increasing simple-index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Degree {
    mask: u64,
    coords: Vec<i32>,
}

impl Degree {
    pub fn zero(p: &Parabolic) -> Self {
        Degree {
            mask: p.mask(),
            coords: vec![0; p.complement().len()],
        }
    }

    /// An effective degree from its coordinates on `Δ ∖ Δ_P`.
    pub fn new(p: &Parabolic, coords: Vec<i32>) -> Result<Self> {
        if coords.len() != p.complement().len() {
            return Err(usage(format!(
                "degree needs {} coordinates, got {}",
                p.complement().len(),
                coords.len()
            )));
        }
        if coords.iter().any(|&c| c < 0) {
            return Err(usage("degree is not effective"));
        }
        Ok(Degree {
            mask: p.mask(),
            coords,
        })
    }

    /// Image of a coroot-lattice vector (over all simple coroots).
    pub fn project(p: &Parabolic, coroot: &[i32]) -> Self {
        Degree {
            mask: p.mask(),
            coords: p.complement().iter().map(|&i| coroot[i]).collect(),
        }
    }

    /// The class `[C_α] = α^∨ + ZΔ_P^∨`.
    pub fn of_root(p: &Parabolic, root: &Root) -> Self {
        Self::project(p, &root.coroot)
    }

    /// Accepts either `|Δ ∖ Δ_P|` coordinates or a full coroot vector.
    pub fn parse(p: &Parabolic, text: &str) -> Result<Self> {
        let text = text.trim();
        let coords: Vec<i32> = if text.is_empty() {
            Vec::new()
        } else {
            text.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| usage(format!("bad degree coordinate '{}'", t.trim())))
                })
                .collect::<Result<_>>()?
        };
        if coords.len() == p.rank() && coords.len() != p.complement().len() {
            if coords.iter().any(|&c| c < 0) {
                return Err(usage("degree is not effective"));
            }
            return Ok(Self::project(p, &coords));
        }
        Self::new(p, coords)
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn is_effective(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// The lift to `ZΔ^∨` with zero `Δ_P` coordinates.
    pub fn lift(&self, p: &Parabolic) -> Vec<i32> {
        let mut out = vec![0; p.rank()];
        for (&i, &c) in p.complement().iter().zip(&self.coords) {
            out[i] = c;
        }
        out
    }

    fn check(&self, other: &Degree) -> Result<()> {
        if self.mask != other.mask {
            return Err(usage("degrees belong to different parabolic subgroups"));
        }
        Ok(())
    }

    /// Componentwise `≤`.
    pub fn leq(&self, other: &Degree) -> Result<bool> {
        self.check(other)?;
        Ok(root_leq(&self.coords, &other.coords))
    }

    pub fn add(&self, other: &Degree) -> Result<Degree> {
        self.check(other)?;
        Ok(Degree {
            mask: self.mask,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `self - other`, rejected unless the result is effective.
    pub fn checked_sub(&self, other: &Degree) -> Result<Degree> {
        self.check(other)?;
        let coords: Vec<i32> = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        if coords.iter().any(|&c| c < 0) {
            return Err(usage(format!("{self} - {other} is not effective")));
        }
        Ok(Degree {
            mask: self.mask,
            coords,
        })
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// The roots of a greedy decomposition, by root-table index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyDecomposition {
    pub roots: Vec<usize>,
    pub degree: Degree,
}

/// `z_d^P` as a minimal representative, and `z_d^P w_P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZElement {
    pub z_min: WeylElt,
    pub z_times_wp: WeylElt,
}

/// Roots of `R⁺ ∖ R⁺_P` whose class is `≤ d`.
fn qualifying<'a>(p: &'a Parabolic, d: &Degree) -> Vec<&'a Root> {
    p.outside_roots()
        .filter(|r| {
            p.complement()
                .iter()
                .zip(&d.coords)
                .all(|(&i, &c)| r.coroot[i] <= c)
        })
        .collect()
}

/// Maximal elements of `{α ∈ R⁺ ∖ R⁺_P : [α^∨] ≤ d}`, in root-table order.
pub fn maximal_roots<'a>(p: &'a Parabolic, d: &Degree) -> Result<Vec<&'a Root>> {
    if d.mask != p.mask() {
        return Err(usage("degree belongs to a different parabolic subgroup"));
    }
    if !d.is_effective() {
        return Err(usage("degree is not effective"));
    }
    if d.is_zero() {
        return Err(usage("the zero degree has no maximal roots"));
    }
    let cands = qualifying(p, d);
    Ok(cands
        .iter()
        .filter(|a| {
            !cands
                .iter()
                .any(|b| b.index != a.index && root_leq(&a.coords, &b.coords))
        })
        .copied()
        .collect())
}

/// The greedy decomposition, taking the smallest-index maximal root each step.
pub fn greedy(p: &Parabolic, d: &Degree) -> Result<GreedyDecomposition> {
    if !d.is_effective() {
        return Err(usage("degree is not effective"));
    }
    let mut rest = d.clone();
    let mut roots = Vec::new();
    while !rest.is_zero() {
        let maxima = maximal_roots(p, &rest)?;
        let alpha = maxima[0];
        for beta in &maxima[1..] {
            if !p.roots().are_separated(alpha, beta) {
                return Err(internal(format!(
                    "maximal roots {} and {} of {rest} are not separated",
                    p.roots().format_root(alpha),
                    p.roots().format_root(beta)
                )));
            }
        }
        roots.push(alpha.index);
        rest = rest.checked_sub(&Degree::of_root(p, alpha))?;
    }
    Ok(GreedyDecomposition {
        roots,
        degree: d.clone(),
    })
}

/// Hecke product `s_{α_1} · … · s_{α_k} · w_P` along a root sequence.
pub fn hecke_reflections(p: &Parabolic, roots: &[usize]) -> WeylElt {
    let g = p.group();
    let mut acc = g.identity();
    for &idx in roots {
        let s = g.reflection(p.roots().root(idx));
        acc = hecke_mul(g, &acc, &s);
    }
    hecke_mul(g, &acc, p.w_p())
}

pub fn z_of_degree(p: &Parabolic, d: &Degree) -> Result<ZElement> {
    let dec = greedy(p, d)?;
    let z_times_wp = hecke_reflections(p, &dec.roots);
    let g = p.group();
    if hecke_mul(g, p.w_p(), &z_times_wp) != z_times_wp {
        return Err(internal(format!(
            "w_P does not absorb z_d^P w_P for d = {d}"
        )));
    }
    let z_min = p.min_rep(&z_times_wp);
    if g.multiply(&z_min, p.w_p()) != z_times_wp {
        return Err(internal(format!(
            "z_d^P w_P is not a maximal representative for d = {d}"
        )));
    }
    Ok(ZElement { z_min, z_times_wp })
}

/// The coset `z_d^P W_P`.
pub fn z_coset(p: &Parabolic, d: &Degree) -> Result<Coset> {
    Ok(p.coset_of_min_rep(z_of_degree(p, d)?.z_min))
}

/// `(c_1(T_X), d)`.
pub fn c1_pairing(p: &Parabolic, d: &Degree) -> i32 {
    p.complement()
        .iter()
        .zip(&d.coords)
        .map(|(&j, &c)| p.c1_vector()[j] * c)
        .sum()
}

/// `(c_1(T_X), e)` for an arbitrary coroot-lattice vector `e`.
pub fn c1_pairing_lift(p: &Parabolic, coroot: &[i32]) -> i32 {
    p.c1_vector().iter().zip(coroot).map(|(a, b)| a * b).sum()
}

fn require_outside(p: &Parabolic, alpha: &Root) -> Result<()> {
    if p.in_levi(alpha.index) {
        return Err(usage(format!(
            "{} lies in the Levi root system R⁺_P",
            p.roots().format_root(alpha)
        )));
    }
    Ok(())
}

/// Whether `α` is a maximal root of its own class `α^∨ + ZΔ_P^∨`.
pub fn is_cosmall(p: &Parabolic, alpha: &Root) -> Result<bool> {
    require_outside(p, alpha)?;
    let maxima = maximal_roots(p, &Degree::of_root(p, alpha))?;
    Ok(maxima.iter().any(|r| r.index == alpha.index))
}

/// All `P`-cosmall roots in root-table order.
pub fn cosmall_roots(p: &Parabolic) -> Vec<&Root> {
    p.outside_roots()
        .filter(|r| is_cosmall(p, r).expect("outside roots are valid"))
        .collect()
}

/// The three equivalent characterisations of a `P`-cosmall root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosmallCriteria {
    pub is_p_cosmall: bool,
    pub length_equality: bool,
    pub condition_c: bool,
}

pub fn cosmall_criteria(p: &Parabolic, alpha: &Root) -> Result<CosmallCriteria> {
    let is_p_cosmall = is_cosmall(p, alpha)?;
    let g = p.group();
    let rs = p.roots();
    let s = g.reflection(alpha);
    let length_equality =
        p.coset_length(&s) as i32 == c1_pairing(p, &Degree::of_root(p, alpha)) - 1;

    let pairing_ok = p
        .outside_roots()
        .filter(|r| r.index != alpha.index && g.is_inversion(&s, r))
        .all(|r| rs.pair(&r.coords, &alpha.coroot) == 1);
    // (R⁺ ∖ R⁺_P) ∩ s_α(R⁺_P) = ∅
    let levi_ok = p.positive_roots_p().all(|r| {
        let img = s.act(&r.coords);
        match rs.find(&img) {
            Some(idx) => p.in_levi(idx),
            None => true,
        }
    });
    let criteria = CosmallCriteria {
        is_p_cosmall,
        length_equality,
        condition_c: pairing_ok && levi_ok,
    };
    if !(is_p_cosmall == length_equality && length_equality == criteria.condition_c) {
        return Err(internal(format!(
            "cosmall criteria disagree for {}: {criteria:?}",
            rs.format_root(alpha)
        )));
    }
    Ok(criteria)
}

/// A root is large if it is long and a sum of two short positive roots.
/// Simply-laced systems have no large roots.
pub fn is_small(rs: &RootSystem, alpha: &Root) -> bool {
    if rs.is_simply_laced() || !alpha.is_long {
        return true;
    }
    let short: Vec<&Root> = rs.positive_roots().iter().filter(|r| !r.is_long).collect();
    !short.iter().any(|a| {
        short.iter().any(|b| {
            a.coords
                .iter()
                .zip(&b.coords)
                .zip(&alpha.coords)
                .all(|((x, y), z)| x + y == *z)
        })
    })
}

/// Whether `α^∨` is a small root of the dual system.
pub fn coroot_is_small(dual: &RootSystem, alpha: &Root) -> Result<bool> {
    let idx = dual
        .find(&alpha.coroot)
        .ok_or_else(|| internal("coroot missing from the dual root system"))?;
    Ok(is_small(dual, dual.root(idx)))
}

/// Roots `α ∈ R⁺ ∖ R⁺_P` for which `P`-cosmall and `z^P_{α^∨} W_P = s_α W_P`
/// disagree. Only defined for simply-laced systems.
pub fn conjecture_scan(p: &Parabolic) -> Result<Vec<&Root>> {
    if !p.roots().is_simply_laced() {
        return Err(usage(format!(
            "type {} is not simply laced",
            p.roots().label()
        )));
    }
    let g = p.group();
    let mut bad = Vec::new();
    for alpha in p.outside_roots() {
        let cosmall = is_cosmall(p, alpha)?;
        let z = z_of_degree(p, &Degree::of_root(p, alpha))?;
        let s = p.min_rep(&g.reflection(alpha));
        if cosmall != (z.z_min == s) {
            bad.push(alpha);
        }
    }
    Ok(bad)
}

/// `z_d` for the full flag variety from a coroot vector.
pub fn z_full(borel: &Parabolic, coroot: &[i32]) -> Result<WeylElt> {
    debug_assert!(borel.subset().is_empty());
    Ok(z_of_degree(borel, &Degree::new(borel, coroot.to_vec())?)?.z_times_wp)
}
