//! The `e_i` model of the classical types.
//!
//! Classical roots are often written in an orthonormal basis `e_1, …, e_n`
//! with simple roots `β_i = e_{i+1} - e_i` for `1 ≤ i ≤ n-1`, completed by
//! `β_0 = e_1` (type B), `β̂_0 = 2e_1` (type C) or `β_{-1} = e_2 + e_1`
//! (type D). That labelling runs the Dynkin diagram in the opposite direction
//! from Bourbaki, so for B/C/D with rank `n`:
//!
//! | e-model label        | Bourbaki index (1-based) |
//! |----------------------|--------------------------|
//! | `β_i`, `i ≥ 1`       | `n - i`                  |
//! | `β_0` / `β̂_0`        | `n`                      |
//! | `β_{-1}` (type D)    | `n`                      |
//!
//! For `A_{n-1}` the label `β_i` is Bourbaki index `i`.

use super::{CartanType, Family};

/// Dimension of the `e`-space: `rank + 1` for type A, `rank` for B/C/D.
pub fn e_dimension(t: CartanType) -> Option<usize> {
    match t.family() {
        Family::A => Some(t.rank() + 1),
        Family::B | Family::C | Family::D => Some(t.rank()),
        _ => None,
    }
}

/// 0-based Bourbaki index of the simple root carrying e-model label `label`
/// (`-1`, `0`, `1`, …).
pub fn simple_index(t: CartanType, label: i32) -> Option<usize> {
    let n = t.rank() as i32;
    let idx = match (t.family(), label) {
        (Family::A, i) if (1..=n).contains(&i) => i - 1,
        (Family::B | Family::C, 0) => n - 1,
        (Family::D, -1) => n - 1,
        (Family::B | Family::C | Family::D, i) if (1..n).contains(&i) => n - 1 - i,
        _ => return None,
    };
    Some(idx as usize)
}

/// The e-model label of a Bourbaki simple index, e.g. `"β0"` or `"β-1"`.
pub fn simple_label(t: CartanType, index: usize) -> Option<String> {
    let n = t.rank();
    if index >= n {
        return None;
    }
    let label = match t.family() {
        Family::A => format!("β{}", index + 1),
        Family::B if index == n - 1 => "β0".to_string(),
        Family::C if index == n - 1 => "β̂0".to_string(),
        Family::D if index == n - 1 => "β-1".to_string(),
        Family::B | Family::C | Family::D => format!("β{}", n - 1 - index),
        _ => return None,
    };
    Some(label)
}

/// Converts a vector in the `e`-basis into Bourbaki simple-root coordinates.
///
/// Returns `None` for vectors outside the root lattice.
pub fn from_e_basis(t: CartanType, v: &[i32]) -> Option<Vec<i32>> {
    let dim = e_dimension(t)?;
    if v.len() != dim {
        return None;
    }
    let n = t.rank();
    let tail = |i: usize| -> i32 { v[i..].iter().sum() };
    let mut out = vec![0; n];
    match t.family() {
        Family::A => {
            if tail(0) != 0 {
                return None;
            }
            // v = Σ c_i (e_{i+1} - e_i)  ⇒  c_i = -(v_1 + … + v_i)
            let mut acc = 0;
            for i in 0..n {
                acc += v[i];
                out[i] = -acc;
            }
        }
        Family::B | Family::C | Family::D => {
            // c_i = v_{i+1} + … + v_n for the chain labels i ≥ 1 (i ≥ 2 in D).
            let first_chain = if t.family() == Family::D { 2 } else { 1 };
            for label in first_chain..n {
                out[n - 1 - label] = tail(label);
            }
            match t.family() {
                Family::B => out[n - 1] = tail(0),
                Family::C => {
                    if tail(0) % 2 != 0 {
                        return None;
                    }
                    out[n - 1] = tail(0) / 2;
                }
                _ => {
                    let s1 = tail(1) - v[0];
                    if tail(0) % 2 != 0 || s1 % 2 != 0 {
                        return None;
                    }
                    out[n - 1] = tail(0) / 2;
                    out[n - 2] = s1 / 2;
                }
            }
        }
        _ => return None,
    }
    Some(out)
}

/// `e_j - e_i` as an e-vector (1-based `i`, `j`).
pub fn e_diff(dim: usize, j: usize, i: usize) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[j - 1] += 1;
    v[i - 1] -= 1;
    v
}

/// `e_j + e_i` as an e-vector (1-based, `i == j` gives `2e_i`).
pub fn e_sum(dim: usize, j: usize, i: usize) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[j - 1] += 1;
    v[i - 1] += 1;
    v
}

/// `e_i` as an e-vector (1-based).
pub fn e_unit(dim: usize, i: usize) -> Vec<i32> {
    let mut v = vec![0; dim];
    v[i - 1] = 1;
    v
}
