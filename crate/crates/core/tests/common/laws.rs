//! Checks shared by the property tests and the acceptance suite. Each one
//! returns a description of the first violation it finds.

use curvenbhd::degree::{hecke_reflections, maximal_roots, z_of_degree};
use curvenbhd::hecke::hecke_mul;
use curvenbhd::rootsys::Root;
use curvenbhd::{Degree, Parabolic, WeylElt, WeylGroup};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// `u · v` folded from the left with `u`'s letters, independent of the
/// right-fold used by the library.
pub fn hecke_left(g: &WeylGroup, u: &WeylElt, v: &WeylElt) -> WeylElt {
    let mut out = v.clone();
    for &i in g.word(u).iter().rev() {
        let s = g.left_mul_simple(i, &out);
        if g.length(&s) > g.length(&out) {
            out = s;
        }
    }
    out
}

fn inversions_subset(g: &WeylGroup, a: &WeylElt, b: &WeylElt) -> bool {
    g.roots()
        .positive_roots()
        .iter()
        .all(|r| !g.is_inversion(a, r) || g.is_inversion(b, r))
}

/// Associativity, inverses, dominance, the reduced factor and inversion
/// containment for a triple, plus the reduced-product equivalences for
/// `(u, v)`.
pub fn hecke_triple(g: &WeylGroup, u: &WeylElt, v: &WeylElt, w: &WeylElt) -> Check {
    let f = |x: &WeylElt| g.format(x);
    let uv = hecke_mul(g, u, v);
    ensure!(
        uv == hecke_left(g, u, v),
        "left and right folds differ for {} · {}",
        f(u),
        f(v)
    );
    ensure!(
        hecke_mul(g, &uv, w) == hecke_mul(g, u, &hecke_mul(g, v, w)),
        "not associative on {} {} {}",
        f(u),
        f(v),
        f(w)
    );
    ensure!(
        g.inverse(&uv) == hecke_mul(g, &g.inverse(v), &g.inverse(u)),
        "inverse law fails for {} · {}",
        f(u),
        f(v)
    );
    let plain = g.multiply(u, v);
    ensure!(
        g.bruhat_leq(u, &uv) && g.bruhat_leq(v, &uv) && g.bruhat_leq(&plain, &uv),
        "dominance fails for {} · {}",
        f(u),
        f(v)
    );
    ensure!(
        g.length(&uv) <= g.length(u) + g.length(v),
        "length bound fails for {} · {}",
        f(u),
        f(v)
    );
    let u2 = g.multiply(&uv, &g.inverse(v));
    ensure!(
        g.bruhat_leq(&u2, u) && g.multiply(&u2, v) == uv && hecke_mul(g, &u2, v) == uv,
        "reduced factor fails for {} · {}",
        f(u),
        f(v)
    );
    ensure!(
        inversions_subset(g, v, &uv),
        "I(v) ⊄ I(u · v) for {} · {}",
        f(u),
        f(v)
    );
    // Reduced-product equivalences.
    let a = g.length(&plain) == g.length(u) + g.length(v);
    let b = g.length(&uv) == g.length(u) + g.length(v);
    let c = uv == plain;
    let d = inversions_subset(g, v, &plain);
    let vinv = g.inverse(v);
    let e = g
        .roots()
        .positive_roots()
        .iter()
        .all(|r| !(g.is_inversion(u, r) && g.is_inversion(&vinv, r)));
    ensure!(
        a == b && b == c && c == d && d == e,
        "reduced-product criteria disagree for {} {}: {a} {b} {c} {d} {e}",
        f(u),
        f(v)
    );
    Ok(())
}

/// `v ≤ v'` implies `u · v · w ≤ u · v' · w`.
pub fn hecke_monotone(g: &WeylGroup, u: &WeylElt, v: &WeylElt, v2: &WeylElt, w: &WeylElt) -> Check {
    if !g.bruhat_leq(v, v2) {
        return Ok(());
    }
    let lhs = hecke_mul(g, &hecke_mul(g, u, v), w);
    let rhs = hecke_mul(g, &hecke_mul(g, u, v2), w);
    ensure!(
        g.bruhat_leq(&lhs, &rhs),
        "monotonicity fails for {} {} {} {}",
        g.format(u),
        g.format(v),
        g.format(v2),
        g.format(w)
    );
    Ok(())
}

/// The length bound for `u · vW_P`, with equality forcing `u · vW_P = uvW_P`.
pub fn hecke_coset_length(p: &Parabolic, u: &WeylElt, v: &WeylElt) -> Check {
    let g = p.group();
    let prod = p.coset(&hecke_mul(g, u, v));
    let lp = p.coset_length(prod.min_rep());
    let bound = g.length(u) + p.coset_length(v);
    ensure!(
        lp <= bound,
        "coset length bound fails for {} · {}",
        g.format(u),
        g.format(v)
    );
    if lp == bound {
        ensure!(
            prod == p.coset(&g.multiply(u, v)),
            "equality without u · vW_P = uvW_P for {} · {}",
            g.format(u),
            g.format(v)
        );
    }
    Ok(())
}

/// Whether `root ∨ ≤ d` as classes.
pub fn class_leq(p: &Parabolic, root: &Root, d: &Degree) -> bool {
    Degree::of_root(p, root).leq(d).unwrap()
}

fn zwp(p: &Parabolic, d: &Degree) -> WeylElt {
    if d.is_zero() {
        return p.w_p().clone();
    }
    z_of_degree(p, d).unwrap().z_times_wp
}

/// The inequalities comparing `z_d^P w_P` with `s_α · z_{d-α^∨}^P w_P` and
/// `z_{d'}^P · z_{d-d'}^P w_P`, with equality at maximal roots.
pub fn z_inequalities(p: &Parabolic, d: &Degree, d2: &Degree, alpha: &Root) -> Check {
    let g = p.group();
    let top = zwp(p, d);
    if class_leq(p, alpha, d) {
        let rest = d.checked_sub(&Degree::of_root(p, alpha)).unwrap();
        let zr = zwp(p, &rest);
        let s = g.reflection(alpha);
        let left = hecke_mul(g, &s, &zr);
        ensure!(
            g.bruhat_leq(&left, &top),
            "s_α · z_(d-α) w_P ≰ z_d w_P for α = {}, d = {d}",
            p.roots().format_root(alpha)
        );
        ensure!(
            g.bruhat_leq(&hecke_mul(g, &zr, &s), &top),
            "z_(d-α) w_P · s_α ≰ z_d w_P for α = {}, d = {d}",
            p.roots().format_root(alpha)
        );
        let cz = p.coset(&hecke_mul(g, &p.min_rep(&zr), &s));
        ensure!(
            p.coset_leq(&cz, &p.coset(&top)),
            "z_(d-α) · s_α W_P ≰ z_d W_P for α = {}, d = {d}",
            p.roots().format_root(alpha)
        );
        if !d.is_zero() && !p.in_levi(alpha.index) {
            let maxima = maximal_roots(p, d).unwrap();
            if maxima.iter().any(|m| m.index == alpha.index) {
                ensure!(
                    left == top,
                    "maximal root {} does not give z_d w_P at d = {d}",
                    p.roots().format_root(alpha)
                );
            }
        }
    }
    if d2.leq(d).unwrap() {
        let rest = d.checked_sub(d2).unwrap();
        let z1 = if d2.is_zero() {
            g.identity()
        } else {
            z_of_degree(p, d2).unwrap().z_min
        };
        let prod = hecke_mul(g, &z1, &zwp(p, &rest));
        ensure!(
            g.bruhat_leq(&prod, &top),
            "z_d' · z_(d-d') w_P ≰ z_d w_P for d' = {d2}, d = {d}"
        );
    }
    Ok(())
}

/// For a lift `e` whose Levi coordinates are large, `z_e = z_d^P w_P`.
pub fn z_lift(p: &Parabolic, borel: &Parabolic, d: &Degree, levi_coord: i32) -> Check {
    let mut e = d.lift(p);
    for &i in p.subset() {
        e[i] = levi_coord;
    }
    let ze = zwp(borel, &Degree::new(borel, e.clone()).unwrap());
    ensure!(ze == zwp(p, d), "z_e ≠ z_d w_P for d = {d}, e = {e:?}");
    Ok(())
}

/// `z_d` built by the library agrees with the Hecke product of a greedy
/// decomposition taken in any order.
pub fn greedy_order_free(p: &Parabolic, roots: &[usize]) -> Check {
    let base = hecke_reflections(p, roots);
    let mut rev = roots.to_vec();
    rev.reverse();
    ensure!(
        hecke_reflections(p, &rev) == base,
        "greedy Hecke product depends on order for {roots:?}"
    );
    Ok(())
}
