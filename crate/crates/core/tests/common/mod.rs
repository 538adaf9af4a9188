#![allow(dead_code)]

pub mod laws;

use std::collections::BTreeMap;

use curvenbhd::rootsys::classical::{e_diff, e_sum, e_unit, from_e_basis};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use curvenbhd::{CartanType, Degree, Family, Parabolic, WeylElt, WeylGroup};

pub fn parabolic(label: &str, subset: &[usize]) -> Parabolic {
    Parabolic::new(WeylGroup::from_label(label).unwrap(), subset).unwrap()
}

pub fn borel(label: &str) -> Parabolic {
    parabolic(label, &[])
}

/// Every subset of `0..rank`, smallest first.
pub fn all_subsets(rank: usize) -> Vec<Vec<usize>> {
    (0u32..1 << rank)
        .map(|m| (0..rank).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

/// `Δ ∖ {γ}` for each `γ`.
pub fn maximal_parabolics(rank: usize) -> Vec<Vec<usize>> {
    (0..rank)
        .map(|g| (0..rank).filter(|&i| i != g).collect())
        .collect()
}

/// Every degree with coordinates in `0..=max`, including zero.
pub fn degrees_up_to(p: &Parabolic, max: i32) -> Vec<Degree> {
    let k = p.complement().len();
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i32>| {
                (0..=max).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|c| Degree::new(p, c).unwrap())
        .collect()
}

pub fn all_elements(g: &WeylGroup) -> Vec<WeylElt> {
    Parabolic::borel(g.clone())
        .enumerate_min_reps(1 << 20)
        .unwrap()
}

/// Every reduced word of `w`.
pub fn reduced_words(g: &WeylGroup, w: &WeylElt) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..g.rank() {
        if w.has_right_descent(i) {
            for mut word in reduced_words(g, &g.right_mul_simple(w, i)) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

/// A seeded generator so every sweep is reproducible.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_element(g: &WeylGroup, rng: &mut impl Rng, max_len: usize) -> WeylElt {
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..g.rank())).collect();
    g.from_word(&word)
}

// Grassmannians Gr(k, n) as A_{n-1} with Δ_P = Δ ∖ {β_k}.

pub fn grassmannian(k: usize, n: usize) -> Parabolic {
    let label = format!("A{}", n - 1);
    let subset: Vec<usize> = (0..n - 1).filter(|&i| i != k - 1).collect();
    parabolic(&label, &subset)
}

/// One-line notation of `w`, values `1..=n`.
pub fn permutation(g: &WeylGroup, w: &WeylElt) -> Vec<usize> {
    let n = g.rank() + 1;
    let mut perm: Vec<usize> = (1..=n).collect();
    for i in g.word(w) {
        perm.swap(i, i + 1);
    }
    perm
}

/// The partition of the Schubert variety `X(u)` in codimension convention:
/// `λ_i = (n - k) - (u(i) - i)`.
pub fn codim_partition(k: usize, n: usize, g: &WeylGroup, u: &WeylElt) -> Vec<usize> {
    let perm = permutation(g, u);
    (1..=k).map(|i| (n - k) - (perm[i - 1] - i)).collect()
}

/// The partition indexing the class `[Y(u)]`: `λ_i = u(k+1-i) - (k+1-i)`.
pub fn class_partition(k: usize, g: &WeylGroup, u: &WeylElt) -> Vec<usize> {
    let perm = permutation(g, u);
    (1..=k).map(|i| perm[k - i] - (k + 1 - i)).collect()
}

/// Removes the first `d` rows and columns of a Young diagram.
pub fn strip_rows_and_columns(lambda: &[usize], d: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..lambda.len())
        .map(|i| lambda.get(i + d).map_or(0, |&x| x.saturating_sub(d)))
        .collect();
    out.resize(lambda.len(), 0);
    out
}

/// `σ_1 ⋆ σ_μ` in `QH(Gr(k, n))`: `(q-degree, partition) -> coefficient`,
/// by Pieri in `k` rows followed by `n`-rim-hook removal.
pub fn pieri_rim_hook(k: usize, n: usize, mu: &[usize]) -> BTreeMap<(i32, Vec<usize>), i32> {
    let width = n - k;
    let mut out = BTreeMap::new();
    for row in 0..k {
        let mut nu = mu.to_vec();
        nu[row] += 1;
        if row > 0 && nu[row] > nu[row - 1] {
            continue;
        }
        if nu[0] <= width {
            *out.entry((0, nu)).or_insert(0) += 1;
            continue;
        }
        // β_i = ν_i + k - i, distinct; an n-rim hook swaps some β for β - n.
        let beta: Vec<i64> = (0..k).map(|i| (nu[i] + k - 1 - i) as i64).collect();
        for j in 0..k {
            let b = beta[j] - n as i64;
            if b < 0 || beta.contains(&b) {
                continue;
            }
            let skipped = beta.iter().filter(|&&x| x > b && x < beta[j]).count();
            let sign = if (k - 1 + skipped) % 2 == 0 { 1 } else { -1 };
            let mut nb = beta.clone();
            nb[j] = b;
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let rho: Vec<usize> = (0..k)
                .map(|i| (nb[i] - (k - 1 - i) as i64) as usize)
                .collect();
            assert!(rho[0] <= width, "rim hook left {rho:?} outside the box");
            *out.entry((1, rho)).or_insert(0) += sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

// The e-coordinate model of the classical types.

/// Cosmall roots of the classical types, read off the standard table and
/// converted to simple-root coordinates. `n` is the e-space dimension.
pub fn classical_cosmall(family: Family, n: usize) -> (CartanType, Vec<Vec<i32>>, Vec<Vec<i32>>) {
    let rank = if family == Family::A { n - 1 } else { n };
    let t = CartanType::new(family, rank).unwrap();
    let conv = |v: Vec<i32>| from_e_basis(t, &v).unwrap();
    let mut all = Vec::new();
    let mut cosmall = Vec::new();
    for j in 1..=n {
        for i in 1..j {
            let minus = conv(e_diff(n, j, i));
            all.push(minus.clone());
            cosmall.push(minus);
            if family != Family::A {
                let plus = conv(e_sum(n, j, i));
                all.push(plus.clone());
                if family != Family::C {
                    cosmall.push(plus);
                }
            }
        }
        match family {
            Family::B => {
                let e = conv(e_unit(n, j));
                all.push(e.clone());
                if j == 1 {
                    cosmall.push(e);
                }
            }
            Family::C => {
                let e2 = conv(e_sum(n, j, j));
                all.push(e2.clone());
                cosmall.push(e2);
            }
            _ => {}
        }
    }
    all.sort();
    cosmall.sort();
    (t, all, cosmall)
}

pub const F4_COSMALL: [[i32; 4]; 15] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [0, 0, 1, 1],
    [0, 1, 2, 0],
    [1, 1, 2, 0],
    [1, 2, 2, 0],
    [0, 1, 2, 2],
    [1, 1, 2, 2],
    [1, 2, 2, 2],
    [1, 2, 4, 2],
    [1, 3, 4, 2],
    [2, 3, 4, 2],
];

pub const G2_COSMALL: [[i32; 2]; 4] = [[1, 0], [0, 1], [3, 1], [3, 2]];

/// The types swept by the neighborhood oracle.
pub const ORACLE_TYPES: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"];

/// Every type of rank at most 5, plus G2 and F4.
pub fn small_types() -> Vec<String> {
    let mut out = Vec::new();
    for r in 1..=5 {
        out.push(format!("A{r}"));
    }
    for r in 2..=5 {
        out.push(format!("B{r}"));
        out.push(format!("C{r}"));
    }
    for r in 4..=5 {
        out.push(format!("D{r}"));
    }
    out.push("G2".into());
    out.push("F4".into());
    out
}
