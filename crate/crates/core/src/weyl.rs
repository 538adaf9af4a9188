//! Weyl group elements, lengths, Bruhat order and parabolic cosets.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{usage, Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Default cap on the number of cosets [`Parabolic::enumerate_min_reps`] will
/// produce.
pub const DEFAULT_COSET_CAP: u64 = 100_000;

/// An element of `W`, stored as its integer matrix on root-lattice
/// coordinates. Column `j` holds the image of the simple root `β_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    rank: usize,
    mat: Vec<i32>,
}

impl WeylElt {
    pub fn identity(rank: usize) -> Self {
        let mut mat = vec![0; rank * rank];
        for i in 0..rank {
            mat[i * rank + i] = 1;
        }
        WeylElt { rank, mat }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElt::identity(self.rank)
    }

    /// Image of `β_j`.
    #[inline]
    pub fn column(&self, j: usize) -> &[i32] {
        &self.mat[j * self.rank..(j + 1) * self.rank]
    }

    /// The action on a root-lattice vector.
    pub fn act(&self, v: &[i32]) -> Vec<i32> {
        let n = self.rank;
        let mut out = vec![0; n];
        for (j, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.column(j)) {
                *o += c * m;
            }
        }
        out
    }

    /// Whether the image of the vector is a negative combination.
    #[inline]
    fn sends_negative(&self, v: &[i32]) -> bool {
        // Images of roots are roots, so the first non-zero entry decides.
        let img = self.act(v);
        img.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
    }

    /// `β_i` is a right descent iff `w(β_i) < 0`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.column(i)
            .iter()
            .find(|&&c| c != 0)
            .is_some_and(|&c| c < 0)
    }

    pub fn matrix(&self) -> Vec<Vec<i32>> {
        (0..self.rank)
            .map(|r| {
                (0..self.rank)
                    .map(|c| self.mat[c * self.rank + r])
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt{:?}", self.matrix())
    }
}

/// The Weyl group of a root system. Cheap to clone.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    roots: Arc<RootSystem>,
}

impl WeylGroup {
    pub fn new(roots: Arc<RootSystem>) -> Self {
        WeylGroup { roots }
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(WeylGroup::new(RootSystem::from_label(label)?))
    }

    pub fn roots(&self) -> &Arc<RootSystem> {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt::identity(self.rank())
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        self.right_mul_simple(&self.identity(), i)
    }

    /// `s_α(v) = v - <v, α^∨> α`.
    pub fn reflection(&self, alpha: &Root) -> WeylElt {
        let n = self.rank();
        let mut mat = vec![0; n * n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let p = self.roots.pair(&e, &alpha.coroot);
            for i in 0..n {
                mat[j * n + i] = e[i] - p * alpha.coords[i];
            }
        }
        WeylElt { rank: n, mat }
    }

    pub fn act(&self, w: &WeylElt, v: &[i32]) -> Vec<i32> {
        w.act(v)
    }

    /// `w s_i`: only column `i` and its neighbours change.
    pub fn right_mul_simple(&self, w: &WeylElt, i: usize) -> WeylElt {
        let n = self.rank();
        let datum = self.roots.datum();
        let mut out = w.clone();
        let col_i: Vec<i32> = w.column(i).to_vec();
        for j in 0..n {
            // s_i(β_j) = β_j - <β_j, β_i^∨> β_i
            let c = datum.entry(j, i);
            if c == 0 {
                continue;
            }
            for r in 0..n {
                out.mat[j * n + r] -= c * col_i[r];
            }
        }
        out
    }

    /// `s_i w`: apply the simple reflection to every column.
    pub fn left_mul_simple(&self, i: usize, w: &WeylElt) -> WeylElt {
        let n = self.rank();
        let mut out = w.clone();
        for j in 0..n {
            let p = self.roots.pair_simple(w.column(j), i);
            out.mat[j * n + i] -= p;
        }
        out
    }

    pub fn multiply(&self, u: &WeylElt, v: &WeylElt) -> WeylElt {
        let n = self.rank();
        let mut mat = vec![0; n * n];
        for j in 0..n {
            let col = u.act(v.column(j));
            mat[j * n..(j + 1) * n].copy_from_slice(&col);
        }
        WeylElt { rank: n, mat }
    }

    pub fn inverse(&self, w: &WeylElt) -> WeylElt {
        // w s_{i1} ⋯ s_{im} = 1 ⇒ w^{-1} = s_{i1} ⋯ s_{im}.
        let mut x = w.clone();
        let mut inv = self.identity();
        while let Some(i) = (0..self.rank()).find(|&i| x.has_right_descent(i)) {
            x = self.right_mul_simple(&x, i);
            inv = self.right_mul_simple(&inv, i);
        }
        inv
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElt {
        word.iter()
            .fold(self.identity(), |w, &i| self.right_mul_simple(&w, i))
    }

    /// The lexicographically smallest reduced word (0-based indices).
    pub fn word(&self, w: &WeylElt) -> Vec<usize> {
        // Left descents of w are right descents of w^{-1}.
        let mut y = self.inverse(w);
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| y.has_right_descent(i)) {
            word.push(i);
            y = self.right_mul_simple(&y, i);
        }
        word
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElt) -> usize {
        self.roots
            .positive_roots()
            .iter()
            .filter(|r| w.sends_negative(&r.coords))
            .count()
    }

    /// Indices of the positive roots in `I(w) = R⁺ ∩ w^{-1}(-R⁺)`.
    pub fn inversion_set(&self, w: &WeylElt) -> Vec<usize> {
        self.roots
            .positive_roots()
            .iter()
            .filter(|r| w.sends_negative(&r.coords))
            .map(|r| r.index)
            .collect()
    }

    pub fn is_inversion(&self, w: &WeylElt, root: &Root) -> bool {
        w.sends_negative(&root.coords)
    }

    /// Bruhat order via the descent recursion: if `ws < w` then
    /// `u ≤ w ⇔ min(u, us) ≤ ws`.
    pub fn bruhat_leq(&self, u: &WeylElt, w: &WeylElt) -> bool {
        let mut lu = self.length(u);
        let mut lw = self.length(w);
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            if lu > lw {
                return false;
            }
            if lu == lw {
                return u == w;
            }
            if lu == 0 {
                return true;
            }
            let i = (0..self.rank())
                .find(|&i| w.has_right_descent(i))
                .expect("non-identity element has a descent");
            w = self.right_mul_simple(&w, i);
            lw -= 1;
            if u.has_right_descent(i) {
                u = self.right_mul_simple(&u, i);
                lu -= 1;
            }
        }
    }

    /// Longest element of the parabolic subgroup generated by `subset`.
    pub fn longest_element(&self, subset: &[usize]) -> WeylElt {
        let mut w = self.identity();
        while let Some(&i) = subset.iter().find(|&&i| !w.has_right_descent(i)) {
            w = self.right_mul_simple(&w, i);
        }
        w
    }

    pub fn longest(&self) -> WeylElt {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.longest_element(&all)
    }

    /// `|W|` from the exponents, read off the height distribution of `roots`.
    pub fn order_of(roots: &[&Root]) -> u64 {
        let max_h = roots.iter().map(|r| r.height()).max().unwrap_or(0) as usize;
        let mut count = vec![0usize; max_h + 2];
        for r in roots {
            count[r.height() as usize] += 1;
        }
        // #{exponents ≥ k} = #{roots of height k}
        let mut order = 1u64;
        for k in 1..=max_h {
            let at_least_k = count[k];
            let at_least_next = count[k + 1];
            for _ in 0..(at_least_k - at_least_next) {
                order *= k as u64 + 1;
            }
        }
        order
    }

    pub fn order(&self) -> u64 {
        let all: Vec<&Root> = self.roots.positive_roots().iter().collect();
        Self::order_of(&all)
    }

    /// Parses a word such as `"2 1 2"` (1-based; `"e"` is the identity).
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        parse_word(text, self.rank())
    }

    pub fn parse_element(&self, text: &str) -> Result<WeylElt> {
        Ok(self.from_word(&self.parse_word(text)?))
    }

    pub fn format(&self, w: &WeylElt) -> String {
        format_word(&self.word(w))
    }
}

/// Formats a 0-based word as space-separated 1-based indices, `e` if empty.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses space- or comma-separated 1-based indices into a 0-based word.
pub fn parse_word(text: &str, rank: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "e" || text == "id" || text == "1" && rank == 0 {
        return Ok(Vec::new());
    }
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let i: usize = t
                .parse()
                .map_err(|_| usage(format!("bad word letter '{t}'")))?;
            if i == 0 || i > rank {
                return Err(usage(format!("simple index {i} out of range 1..={rank}")));
            }
            Ok(i - 1)
        })
        .collect()
}

/// Parses a comma-separated list of 1-based simple indices.
pub fn parse_subset(text: &str, rank: usize) -> Result<Vec<usize>> {
    let mut out = parse_word(text, rank)?;
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A parabolic subgroup `W_P` together with its coset machinery.
#[derive(Clone, Debug)]
pub struct Parabolic {
    group: WeylGroup,
    subset: Vec<usize>,
    mask: u64,
    complement: Vec<usize>,
    in_p: Vec<bool>,
    w_p: WeylElt,
    c1: Vec<i32>,
}

/// A coset `wW_P`, held by its minimal representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    mask: u64,
    min_rep: WeylElt,
}

impl Coset {
    pub fn min_rep(&self) -> &WeylElt {
        &self.min_rep
    }

    pub fn into_min_rep(self) -> WeylElt {
        self.min_rep
    }

    /// Bitmask of the simple indices in `Δ_P`.
    pub fn parabolic_mask(&self) -> u64 {
        self.mask
    }
}

impl Parabolic {
    /// `subset` lists the 0-based simple indices of `Δ_P`.
    pub fn new(group: WeylGroup, subset: &[usize]) -> Result<Self> {
        let n = group.rank();
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
            return Err(usage(format!("simple index {} out of range", bad + 1)));
        }
        let mask = subset.iter().fold(0u64, |m, &i| m | (1 << i));
        let complement = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let in_p: Vec<bool> = group
            .roots()
            .positive_roots()
            .iter()
            .map(|r| r.support().all(|i| mask & (1 << i) != 0))
            .collect();
        let w_p = group.longest_element(&subset);
        let roots = group.roots().clone();
        // c1 = Σ_{γ ∈ R⁺∖R⁺_P} γ, recorded as <c1, β_j^∨>.
        let mut c1 = vec![0; n];
        for r in roots.positive_roots().iter().filter(|r| !in_p[r.index]) {
            for (j, c) in c1.iter_mut().enumerate() {
                *c += roots.pair_simple(&r.coords, j);
            }
        }
        Ok(Parabolic {
            group,
            subset,
            mask,
            complement,
            in_p,
            w_p,
            c1,
        })
    }

    /// The Borel case `Δ_P = ∅`.
    pub fn borel(group: WeylGroup) -> Self {
        Parabolic::new(group, &[]).expect("empty subset is valid")
    }

    pub fn from_labels(type_label: &str, subset_1based: &str) -> Result<Self> {
        let g = WeylGroup::from_label(type_label)?;
        let subset = parse_subset(subset_1based, g.rank())?;
        Parabolic::new(g, &subset)
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn roots(&self) -> &Arc<RootSystem> {
        self.group.roots()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains_simple(&self, i: usize) -> bool {
        self.mask & (1 << i) != 0
    }

    /// `Δ ∖ Δ_P` in increasing order.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn w_p(&self) -> &WeylElt {
        &self.w_p
    }

    /// Whether the positive root lies in `R⁺_P`.
    pub fn in_levi(&self, root_index: usize) -> bool {
        self.in_p[root_index]
    }

    pub fn positive_roots_p(&self) -> impl Iterator<Item = &Root> + '_ {
        self.roots()
            .positive_roots()
            .iter()
            .filter(|r| self.in_p[r.index])
    }

    /// `R⁺ ∖ R⁺_P`.
    pub fn outside_roots(&self) -> impl Iterator<Item = &Root> + '_ {
        self.roots()
            .positive_roots()
            .iter()
            .filter(|r| !self.in_p[r.index])
    }

    /// `<c_1(T_X), β_j^∨>` for each simple index `j` (zero on `Δ_P`).
    pub fn c1_vector(&self) -> &[i32] {
        &self.c1
    }

    /// Splits `w = u v` with `u ∈ W^P`, `v ∈ W_P`.
    pub fn coset_factor(&self, w: &WeylElt) -> (WeylElt, WeylElt) {
        let g = &self.group;
        let mut u = w.clone();
        let mut v_rev = Vec::new();
        while let Some(&i) = self.subset.iter().find(|&&i| u.has_right_descent(i)) {
            u = g.right_mul_simple(&u, i);
            v_rev.push(i);
        }
        v_rev.reverse();
        let v = g.from_word(&v_rev);
        (u, v)
    }

    pub fn min_rep(&self, w: &WeylElt) -> WeylElt {
        self.coset_factor(w).0
    }

    pub fn max_rep(&self, w: &WeylElt) -> WeylElt {
        self.group.multiply(&self.min_rep(w), &self.w_p)
    }

    pub fn is_min_rep(&self, w: &WeylElt) -> bool {
        self.subset.iter().all(|&i| !w.has_right_descent(i))
    }

    pub fn coset(&self, w: &WeylElt) -> Coset {
        Coset {
            mask: self.mask,
            min_rep: self.min_rep(w),
        }
    }

    /// `ℓ(wW_P) = |I(w) ∖ R⁺_P|`.
    pub fn coset_length(&self, w: &WeylElt) -> usize {
        self.outside_roots()
            .filter(|r| self.group.is_inversion(w, r))
            .count()
    }

    pub fn check_coset(&self, c: &Coset) -> Result<()> {
        if c.mask != self.mask {
            return Err(usage("coset belongs to a different parabolic subgroup"));
        }
        Ok(())
    }

    pub fn bruhat_leq_coset(&self, u: &WeylElt, w: &WeylElt) -> bool {
        self.group.bruhat_leq(&self.min_rep(u), &self.min_rep(w))
    }

    pub fn coset_leq(&self, a: &Coset, b: &Coset) -> bool {
        self.group.bruhat_leq(&a.min_rep, &b.min_rep)
    }

    pub fn format_coset(&self, c: &Coset) -> String {
        self.group.format(&c.min_rep)
    }

    /// `|W / W_P|`, computed without enumeration.
    pub fn num_cosets(&self) -> u64 {
        let levi: Vec<&Root> = self.positive_roots_p().collect();
        self.group.order() / WeylGroup::order_of(&levi)
    }

    /// All of `W^P` in BFS order from the identity (by coset length, then
    /// discovery order under left multiplication by `s_1, s_2, …`).
    pub fn enumerate_min_reps(&self, cap: u64) -> Result<Vec<WeylElt>> {
        let needed = self.num_cosets();
        if needed > cap {
            return Err(Error::Resource {
                what: "W/W_P",
                needed,
                cap,
            });
        }
        let g = &self.group;
        let mut out = vec![g.identity()];
        let mut seen: HashSet<WeylElt> = out.iter().cloned().collect();
        let mut level_start = 0;
        while level_start < out.len() {
            let level_end = out.len();
            for k in level_start..level_end {
                for i in 0..g.rank() {
                    let u = &out[k];
                    // s_i u > u iff u^{-1}(β_i) > 0; test via the product.
                    let v = g.left_mul_simple(i, u);
                    if !self.is_min_rep(&v) || seen.contains(&v) {
                        continue;
                    }
                    if g.length(&v) <= g.length(u) {
                        continue;
                    }
                    seen.insert(v.clone());
                    out.push(v);
                }
            }
            level_start = level_end;
        }
        debug_assert_eq!(out.len() as u64, needed);
        Ok(out)
    }

    pub fn enumerate_cosets(&self, cap: u64) -> Result<Vec<Coset>> {
        Ok(self
            .enumerate_min_reps(cap)?
            .into_iter()
            .map(|min_rep| Coset {
                mask: self.mask,
                min_rep,
            })
            .collect())
    }

    pub fn coset_of_min_rep(&self, min_rep: WeylElt) -> Coset {
        debug_assert!(self.is_min_rep(&min_rep));
        Coset {
            mask: self.mask,
            min_rep,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::from_label(label).unwrap()
    }

    fn root<'a>(g: &'a WeylGroup, coords: &[i32]) -> &'a Root {
        g.roots().root(g.roots().find(coords).unwrap())
    }

    #[test]
    fn reflections() {
        let b2 = group("B2");
        let s1 = b2.reflection(b2.roots().simple(0));
        assert_eq!(s1, b2.simple_reflection(0));
        assert_eq!(b2.length(&s1), 1);

        let s_gamma = b2.reflection(root(&b2, &[1, 2]));
        assert_eq!(b2.length(&s_gamma), 3);
        let mut inv: Vec<Vec<i32>> = b2
            .inversion_set(&s_gamma)
            .into_iter()
            .map(|i| b2.roots().root(i).coords.clone())
            .collect();
        inv.sort();
        assert_eq!(inv, vec![vec![0, 1], vec![1, 1], vec![1, 2]]);
        assert_eq!(b2.word(&s_gamma), vec![1, 0, 1]);

        let s_alpha = b2.reflection(root(&b2, &[1, 1]));
        assert_eq!(b2.length(&s_alpha), 3);
        assert_eq!(b2.inverse(&s_alpha), s_alpha);
        assert!(b2.multiply(&s_alpha, &s_alpha).is_identity());
    }

    #[test]
    fn action_examples() {
        let b2 = group("B2");
        assert_eq!(b2.identity().act(&[1, 0]), vec![1, 0]);
        assert_eq!(b2.simple_reflection(1).act(&[1, 0]), vec![1, 2]);
        let a3 = group("A3");
        let s13 = a3.from_word(&[0, 2]);
        assert_eq!(s13.act(&[0, 1, 0]), vec![1, 1, 1]);
    }

    #[test]
    fn lengths_and_products() {
        let b2 = group("B2");
        assert_eq!(b2.length(&b2.identity()), 0);
        assert_eq!(b2.length(&b2.longest()), 4);
        let a2 = group("A2");
        let s1 = a2.simple_reflection(0);
        assert!(a2.multiply(&s1, &s1).is_identity());
        let w = a2.multiply(&s1, &a2.multiply(&a2.simple_reflection(1), &s1));
        assert_eq!(w, a2.longest());
        assert_eq!(a2.length(&w), 3);
    }

    #[test]
    fn left_and_right_simple_products_agree_with_matrix_product() {
        let f4 = group("F4");
        let w = f4.from_word(&[0, 1, 2, 1, 3, 2]);
        for i in 0..4 {
            let s = f4.simple_reflection(i);
            assert_eq!(f4.right_mul_simple(&w, i), f4.multiply(&w, &s));
            assert_eq!(f4.left_mul_simple(i, &w), f4.multiply(&s, &w));
        }
        let inv = f4.inverse(&w);
        assert!(f4.multiply(&inv, &w).is_identity());
    }

    #[test]
    fn longest_elements() {
        let a2 = group("A2");
        assert!(a2.longest_element(&[]).is_identity());
        let w = a2.longest_element(&[0, 1]);
        assert_eq!(a2.length(&w), 3);
        assert_eq!(a2.word(&w), vec![0, 1, 0]);
        let a3 = group("A3");
        let w = a3.longest_element(&[0, 2]);
        assert_eq!(w, a3.from_word(&[0, 2]));
        assert_eq!(a3.length(&w), 2);
    }

    #[test]
    fn coset_factorization() {
        let a3 = group("A3");
        let p = Parabolic::new(a3.clone(), &[0, 2]).unwrap();
        let w0 = a3.longest();
        let (u, v) = p.coset_factor(&w0);
        assert_eq!(a3.length(&u), 4);
        assert_eq!(v, a3.from_word(&[0, 2]));
        assert_eq!(a3.multiply(&u, &v), w0);
        assert_eq!(p.coset_length(&w0), 4);
        assert_eq!(p.coset_length(&a3.identity()), 0);

        let s1 = a3.simple_reflection(0);
        let (u, v) = p.coset_factor(&s1);
        assert!(u.is_identity());
        assert_eq!(v, s1);

        let b2 = group("B2");
        let p = Parabolic::new(b2.clone(), &[1]).unwrap();
        let (u, v) = p.coset_factor(&b2.longest());
        assert_eq!(b2.length(&u), 3);
        assert_eq!(v, b2.simple_reflection(1));
        let s_alpha = b2.from_word(&[0, 1, 0]);
        assert_eq!(p.coset_length(&s_alpha), 3);
        assert_eq!(p.coset(&s_alpha), p.coset(&b2.longest()));
    }

    #[test]
    fn bruhat_examples() {
        let a2 = group("A2");
        let s1 = a2.from_word(&[0]);
        assert!(a2.bruhat_leq(&a2.identity(), &s1));
        assert!(a2.bruhat_leq(&s1, &a2.from_word(&[1, 0])));
        assert!(!a2.bruhat_leq(&a2.from_word(&[0, 1]), &a2.from_word(&[1, 0])));
        let b2 = group("B2");
        assert!(b2.bruhat_leq(&b2.from_word(&[1, 0, 1]), &b2.longest()));
    }

    #[test]
    fn min_rep_enumeration() {
        let a3 = group("A3");
        let full = Parabolic::new(a3.clone(), &[0, 1, 2]).unwrap();
        assert_eq!(full.enumerate_min_reps(10).unwrap(), vec![a3.identity()]);
        let gr24 = Parabolic::new(a3.clone(), &[0, 2]).unwrap();
        let reps = gr24.enumerate_min_reps(10).unwrap();
        assert_eq!(reps.len(), 6);
        let lengths: Vec<usize> = reps.iter().map(|u| a3.length(u)).collect();
        assert_eq!(lengths, vec![0, 1, 2, 2, 3, 4]);
        let b2 = Parabolic::borel(group("B2"));
        assert_eq!(b2.enumerate_min_reps(8).unwrap().len(), 8);
        let err = b2.enumerate_min_reps(7).unwrap_err();
        assert_eq!(
            err,
            Error::Resource {
                what: "W/W_P",
                needed: 8,
                cap: 7
            }
        );
    }

    #[test]
    fn group_orders() {
        for (label, order) in [
            ("A3", 24),
            ("B3", 48),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
            ("E6", 51840),
            ("E8", 696729600),
        ] {
            assert_eq!(group(label).order(), order, "{label}");
        }
        let p = Parabolic::from_labels("E6", "1,2,3,4,5").unwrap();
        assert_eq!(p.num_cosets(), 27);
    }

    #[test]
    fn words_round_trip_and_parse() {
        let b2 = group("B2");
        assert_eq!(parse_word("2 1 2", 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_word("e", 2).unwrap(), Vec::<usize>::new());
        assert!(parse_word("3", 2).is_err());
        assert!(parse_word("x", 2).is_err());
        let w = b2.parse_element("1 2 1 2").unwrap();
        assert_eq!(b2.format(&w), "1 2 1 2");
        assert_eq!(b2.format(&b2.identity()), "e");
        // Non-reduced input still denotes the product.
        assert_eq!(b2.parse_element("1 1").unwrap(), b2.identity());
    }

    #[test]
    fn subword_criterion_agrees_with_descent_recursion() {
        for label in ["A3", "B3", "G2"] {
            let g = group(label);
            let p = Parabolic::borel(g.clone());
            let all = p.enumerate_min_reps(100).unwrap();
            let words: Vec<Vec<usize>> = all.iter().map(|w| g.word(w)).collect();
            for (u, wu) in all.iter().zip(&words) {
                let lu = wu.len();
                for (w, ww) in all.iter().zip(&words) {
                    let by_subword = subword_leq(&g, u, lu, ww);
                    assert_eq!(g.bruhat_leq(u, w), by_subword, "{label} {wu:?} {ww:?}");
                }
            }
        }
    }

    // u ≤ w iff some subword of a reduced word of w is a reduced word of u.
    fn subword_leq(g: &WeylGroup, u: &WeylElt, lu: usize, word: &[usize]) -> bool {
        let n = word.len();
        if lu > n {
            return false;
        }
        (0u32..1 << n).any(|mask| {
            mask.count_ones() as usize == lu && {
                let sub: Vec<usize> = (0..n)
                    .filter(|k| mask & (1 << k) != 0)
                    .map(|k| word[k])
                    .collect();
                g.from_word(&sub) == *u
            }
        })
    }
}
