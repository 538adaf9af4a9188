//! The Hecke (0-Hecke / Demazure) monoid product.

use crate::weyl::{Coset, Parabolic, WeylElt, WeylGroup};

/// `u · s_i` in the Hecke monoid: `u s_i` if that is longer, else `u`.
#[inline]
pub fn hecke_mul_simple(g: &WeylGroup, u: &WeylElt, i: usize) -> WeylElt {
    if u.has_right_descent(i) {
        u.clone()
    } else {
        g.right_mul_simple(u, i)
    }
}

/// Folds a word into `u` from left to right.
pub fn hecke_fold(g: &WeylGroup, u: &WeylElt, word: &[usize]) -> WeylElt {
    let mut out = u.clone();
    for &i in word {
        if !out.has_right_descent(i) {
            out = g.right_mul_simple(&out, i);
        }
    }
    out
}

/// The Hecke product `u · v`.
pub fn hecke_mul(g: &WeylGroup, u: &WeylElt, v: &WeylElt) -> WeylElt {
    hecke_fold(g, u, &g.word(v))
}

/// Hecke product of a sequence, `w_1 · w_2 · … · w_k`.
pub fn hecke_product<'a>(g: &WeylGroup, factors: impl IntoIterator<Item = &'a WeylElt>) -> WeylElt {
    factors
        .into_iter()
        .fold(g.identity(), |acc, w| hecke_mul(g, &acc, w))
}

/// `u · wW_P = (u · w)W_P`.
pub fn hecke_mul_coset(p: &Parabolic, u: &WeylElt, c: &Coset) -> Coset {
    p.coset(&hecke_mul(p.group(), u, c.min_rep()))
}

/// Whether `ℓ(uv) = ℓ(u) + ℓ(v)`.
pub fn is_reduced_product(g: &WeylGroup, u: &WeylElt, v: &WeylElt) -> bool {
    let reduced = g.length(&g.multiply(u, v)) == g.length(u) + g.length(v);
    debug_assert_eq!(
        reduced,
        inversions_disjoint(g, u, &g.inverse(v)),
        "reduced-product criteria disagree"
    );
    reduced
}

/// `I(u) ∩ I(v) = ∅`; with `v` replaced by `v^{-1}` this characterises
/// reduced products.
pub fn inversions_disjoint(g: &WeylGroup, u: &WeylElt, v: &WeylElt) -> bool {
    g.roots()
        .positive_roots()
        .iter()
        .all(|r| !(g.is_inversion(u, r) && g.is_inversion(v, r)))
}
