//! Two-point Gromov-Witten invariants and the equivariant quantum Chevalley
//! formula.

use serde::{Deserialize, Serialize};

use crate::degree::{c1_pairing, cosmall_criteria, greedy, Degree};
use crate::error::{internal, usage, Result};
use crate::nbhd::curve_neighborhood;
use crate::weyl::{Coset, Parabolic, WeylElt};

/// `[X(w s_α)]` when `(ev_1)_*[GW_d(w)]` is non-zero, else `None`.
pub fn pushforward_class(p: &Parabolic, w: &WeylElt, d: &Degree) -> Result<Option<Coset>> {
    if d.is_zero() {
        return Err(usage("pushforward needs a positive degree"));
    }
    let w = p.min_rep(w);
    let nbhd = curve_neighborhood(p, &w, d)?;
    let expected = p.coset_length(&w) as i32 + c1_pairing(p, d) - 1;
    if p.coset_length(nbhd.min_rep()) as i32 != expected {
        return Ok(None);
    }
    // The certificate: d is the class of a single P-cosmall root α and the
    // neighborhood is w s_α W_P.
    let dec = greedy(p, d)?;
    let [idx] = dec.roots[..] else {
        return Err(internal(format!(
            "top-dimensional pushforward at d = {d} has no root"
        )));
    };
    let alpha = p.roots().root(idx);
    if !cosmall_criteria(p, alpha)?.is_p_cosmall {
        return Err(internal("pushforward root is not P-cosmall"));
    }
    let g = p.group();
    if p.coset(&g.multiply(&w, &g.reflection(alpha))) != nbhd {
        return Err(internal("pushforward class is not X(w s_α)"));
    }
    Ok(Some(nbhd))
}

/// `I_d([Y(u)], [X(w)])`, which is 0 or 1.
pub fn gw_two_point(p: &Parabolic, u: &WeylElt, w: &WeylElt, d: &Degree) -> Result<u32> {
    Ok(match pushforward_class(p, w, d)? {
        Some(c) if c == p.coset(u) => 1,
        _ => 0,
    })
}

/// The K-theoretic two-point invariant: 1 iff `uW_P ≤ (w · z_d^P)W_P`.
pub fn ktheory_two_point(p: &Parabolic, u: &WeylElt, w: &WeylElt, d: &Degree) -> Result<u32> {
    let top = curve_neighborhood(p, w, d)?;
    Ok(u32::from(p.coset_leq(&p.coset(u), &top)))
}

/// `I_d([Y(u)], [Y(s_β)], [X(w)]) = (ω_β, d) · I_d([Y(u)], [X(w)])`.
pub fn divisor_three_point(
    p: &Parabolic,
    u: &WeylElt,
    beta: usize,
    w: &WeylElt,
    d: &Degree,
) -> Result<i32> {
    let pos = complement_position(p, beta)?;
    Ok(d.coords()[pos] * gw_two_point(p, u, w, d)? as i32)
}

fn complement_position(p: &Parabolic, beta: usize) -> Result<usize> {
    p.complement()
        .iter()
        .position(|&j| j == beta)
        .ok_or_else(|| usage(format!("β{} is not in Δ ∖ Δ_P", beta + 1)))
}

/// `ω_β - u.ω_β` in simple-root coordinates.
pub fn weight_difference(p: &Parabolic, u: &WeylElt, beta: usize) -> Vec<i32> {
    let g = p.group();
    let datum = g.roots().datum();
    let n = g.rank();
    // λ in fundamental-weight coordinates; s_i(λ) = λ - λ_i α_i and
    // α_i = Σ_j C[i][j] ω_j.
    let mut lambda = vec![0; n];
    lambda[beta] = 1;
    let mut diff = vec![0; n];
    for &i in g.word(u).iter().rev() {
        let c = lambda[i];
        if c == 0 {
            continue;
        }
        diff[i] += c;
        for (j, l) in lambda.iter_mut().enumerate() {
            *l -= c * datum.entry(i, j);
        }
    }
    diff
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalTerm {
    pub coset: Coset,
    pub coeff: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumTerm {
    pub degree: Degree,
    pub coset: Coset,
    pub coeff: i32,
}

/// `[Y(u)] ⋆ [Y(s_β)]` split into its classical, equivariant and quantum
/// parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyResult {
    pub classical: Vec<ClassicalTerm>,
    /// `c_T(λ)` is represented by `λ` itself.
    pub weight: Vec<i32>,
    pub quantum: Vec<QuantumTerm>,
}

pub fn quantum_chevalley(p: &Parabolic, u: &WeylElt, beta: usize) -> Result<ChevalleyResult> {
    let pos = complement_position(p, beta)?;
    let g = p.group();
    let u = p.min_rep(u);
    let lu = p.coset_length(&u) as i32;
    let mut classical = Vec::new();
    let mut quantum = Vec::new();
    for alpha in p.outside_roots() {
        let coeff = alpha.coroot[beta];
        if coeff == 0 {
            continue;
        }
        let v = g.multiply(&u, &g.reflection(alpha));
        let lv = p.coset_length(&v) as i32;
        let d = Degree::of_root(p, alpha);
        debug_assert_eq!(d.coords()[pos], coeff);
        if lv == lu + 1 {
            classical.push(ClassicalTerm {
                coset: p.coset(&v),
                coeff,
            });
        } else if lv == lu + 1 - c1_pairing(p, &d) {
            quantum.push(QuantumTerm {
                degree: d,
                coset: p.coset(&v),
                coeff,
            });
        }
    }
    let key = |c: &Coset| g.word(c.min_rep());
    classical.sort_by_cached_key(|t| key(&t.coset));
    quantum.sort_by_cached_key(|t| (key(&t.coset), t.degree.clone()));
    if classical.windows(2).any(|w| w[0].coset == w[1].coset) {
        return Err(internal("two roots give the same classical Chevalley term"));
    }
    if quantum
        .windows(2)
        .any(|w| w[0].coset == w[1].coset && w[0].degree == w[1].degree)
    {
        return Err(internal("two roots give the same quantum Chevalley term"));
    }
    Ok(ChevalleyResult {
        classical,
        weight: weight_difference(p, &u, beta),
        quantum,
    })
}

impl ChevalleyResult {
    pub fn to_json(&self, p: &Parabolic) -> ChevalleyJson {
        let g = p.group();
        ChevalleyJson {
            classical: self
                .classical
                .iter()
                .map(|t| ClassicalJson {
                    coset: g.format(t.coset.min_rep()),
                    coeff: t.coeff,
                })
                .collect(),
            equivariant: EquivariantJson {
                weight: self.weight.clone(),
            },
            quantum: self
                .quantum
                .iter()
                .map(|t| QuantumJson {
                    degree: t.degree.to_string(),
                    coset: g.format(t.coset.min_rep()),
                    coeff: t.coeff,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevalleyJson {
    pub classical: Vec<ClassicalJson>,
    pub equivariant: EquivariantJson,
    pub quantum: Vec<QuantumJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalJson {
    pub coset: String,
    pub coeff: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantJson {
    pub weight: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumJson {
    pub degree: String,
    pub coset: String,
    pub coeff: i32,
}
