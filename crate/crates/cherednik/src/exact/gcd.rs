//! Multivariate polynomial GCD by recursive content / primitive-part
//! computation with a primitive pseudo-remainder sequence.

use num_traits::One;

use super::multipoly::MultiPoly;
use super::scalar::Scalar;

/// Splits `p` as a univariate polynomial in its first variable, with
/// coefficients in the remaining variables.
fn split_main(p: &MultiPoly) -> Vec<MultiPoly> {
    let n = p.nvars();
    debug_assert!(n >= 1);
    let d = p.degree_in(0).map(|d| d as usize).unwrap_or(0);
    let mut coeffs = vec![MultiPoly::zero(n - 1); d + 1];
    for (e, c) in p.terms() {
        coeffs[e[0] as usize].add_term(e[1..].to_vec(), c.clone());
    }
    coeffs
}

fn join_main(coeffs: &[MultiPoly], nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (d, c) in coeffs.iter().enumerate() {
        for (e, a) in c.terms() {
            let mut exp = Vec::with_capacity(nvars);
            exp.push(d as u32);
            exp.extend_from_slice(e);
            out.add_term(exp, a.clone());
        }
    }
    out
}

fn trim(coeffs: &mut Vec<MultiPoly>) {
    while matches!(coeffs.last(), Some(c) if c.is_zero()) {
        coeffs.pop();
    }
}

/// Content of a univariate-over-polynomials representation: the gcd of the
/// coefficients in the smaller polynomial ring.
fn content(coeffs: &[MultiPoly], inner_vars: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(inner_vars);
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, c);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g
}

fn divide_coeffs(coeffs: &[MultiPoly], d: &MultiPoly) -> Vec<MultiPoly> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.div_exact(d).expect("content divides coefficients")
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, deg a >= deg b) in the
/// univariate representation, coefficients multiplied through by powers of
/// the leading coefficient of `b` so the division stays polynomial.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut r: Vec<MultiPoly> = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().expect("nonzero divisor").clone();
    loop {
        trim(&mut r);
        if r.len() < b.len() {
            return r;
        }
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r <- lb * r - lr * x^(dr-db) * b
        let shift = dr - db;
        let mut next = vec![MultiPoly::zero(lb.nvars()); dr + 1];
        for (i, c) in r.iter().enumerate() {
            next[i] = &lb * c;
        }
        for (i, c) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(&lr * c);
        }
        r = next;
    }
}

/// Univariate gcd over Q (dense coefficient vectors, constant term first).
fn gcd_univariate(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    fn trimmed(mut v: Vec<Scalar>) -> Vec<Scalar> {
        while matches!(v.last(), Some(c) if num_traits::Zero::is_zero(c)) {
            v.pop();
        }
        v
    }
    let mut r0 = trimmed(a.to_vec());
    let mut r1 = trimmed(b.to_vec());
    while !r1.is_empty() {
        // remainder of r0 by r1
        let mut rem = r0.clone();
        let db = r1.len() - 1;
        let lb = r1.last().unwrap().clone();
        while rem.len() > db {
            let dr = rem.len() - 1;
            if dr < db {
                break;
            }
            let f = rem[dr].clone() / &lb;
            for j in 0..=db {
                let adj = &f * &r1[j];
                rem[dr - db + j] -= adj;
            }
            rem = trimmed(rem);
            if rem.is_empty() {
                break;
            }
        }
        r0 = r1;
        r1 = rem;
    }
    r0
}

/// Decides whether gcd(p, q) has positive degree in variable `var` by a
/// random evaluation of the other variables. A constant univariate gcd at
/// a point where neither leading coefficient vanishes proves the full gcd
/// is free of `var`.
fn gcd_free_of_var(p: &MultiPoly, q: &MultiPoly, var: usize, seed: u64) -> Option<bool> {
    let n = p.nvars();
    let dp = p.degree_in(var)? as usize;
    let dq = q.degree_in(var)? as usize;
    if dp == 0 || dq == 0 {
        return Some(true);
    }
    // simple deterministic pseudo-random point
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let mut point = Vec::with_capacity(n);
    for _ in 0..n {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        point.push(Scalar::from_integer((((state >> 33) % 2003) as i64 - 1001).into()));
    }
    let eval_univ = |f: &MultiPoly, deg: usize| -> Vec<Scalar> {
        let mut coeffs = vec![Scalar::from_integer(0.into()); deg + 1];
        for (e, c) in f.terms() {
            let mut v = c.clone();
            for (i, &d) in e.iter().enumerate() {
                if i == var {
                    continue;
                }
                for _ in 0..d {
                    v *= &point[i];
                }
            }
            coeffs[e[var] as usize] += v;
        }
        coeffs
    };
    let pu = eval_univ(p, dp);
    let qu = eval_univ(q, dq);
    // degenerate evaluation: leading coefficient vanished
    if num_traits::Zero::is_zero(&pu[dp]) || num_traits::Zero::is_zero(&qu[dq]) {
        return None;
    }
    let g = gcd_univariate(&pu, &qu);
    Some(g.len() <= 1)
}

/// GCD of two polynomials over the rationals, normalized so the
/// lexicographically leading coefficient is one. `gcd(0, q) = monic(q)`.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    assert_eq!(p.nvars(), q.nvars(), "variable count mismatch");
    let n = p.nvars();
    if p.is_zero() {
        return q.monic().1;
    }
    if q.is_zero() {
        return p.monic().1;
    }
    if n == 0 {
        return MultiPoly::one(0);
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(n);
    }
    // Fast certificate: if the gcd is provably free of the first variable,
    // it divides both contents, so recurse on the contents directly and
    // skip the pseudo-remainder sequence.
    let main_free = (0..3).find_map(|s| gcd_free_of_var(p, q, 0, 17 + s));
    if main_free == Some(true) {
        let (cp, _) = content_primitive(p);
        let (cq, _) = content_primitive(q);
        let g = poly_gcd(&cp, &cq);
        return embed_first(&g, n).monic().1;
    }

    let mut a = split_main(p);
    let mut b = split_main(q);
    let ca = content(&a, n - 1);
    let cb = content(&b, n - 1);
    a = divide_coeffs(&a, &ca);
    b = divide_coeffs(&b, &cb);
    let cont_gcd = poly_gcd(&ca, &cb);

    // Primitive pseudo-remainder sequence on the primitive parts.
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let mut r = pseudo_rem(&a, &b);
        trim(&mut r);
        if r.is_empty() {
            break;
        }
        let cr = content(&r, n - 1);
        let r = divide_coeffs(&r, &cr);
        a = b;
        b = r;
    }
    let cb2 = content(&b, n - 1);
    let prim = divide_coeffs(&b, &cb2);

    let lifted = join_main(&prim, n);
    let g = &embed_first(&cont_gcd, n) * &lifted;
    g.monic().1
}

/// Embeds a polynomial in `n-1` variables as one in `n` variables that does
/// not involve the first variable.
fn embed_first(p: &MultiPoly, nvars: usize) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars);
    for (e, c) in p.terms() {
        let mut exp = Vec::with_capacity(nvars);
        exp.push(0);
        exp.extend_from_slice(e);
        out.add_term(exp, c.clone());
    }
    out
}

/// Content (gcd of coefficients) and primitive part with respect to the
/// first variable; exposed for tests.
pub fn content_primitive(p: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let n = p.nvars();
    if p.is_zero() || n == 0 {
        return (MultiPoly::one(n.max(1) - 1), p.clone());
    }
    let coeffs = split_main(p);
    let c = content(&coeffs, n - 1);
    let pp = join_main(&divide_coeffs(&coeffs, &c), n);
    (c, pp)
}

/// True when `d` divides `p` exactly.
pub fn divides(d: &MultiPoly, p: &MultiPoly) -> bool {
    p.div_exact(d).is_ok()
}

/// Least common multiple, normalized monic.
pub fn poly_lcm(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero(p.nvars());
    }
    let g = poly_gcd(p, q);
    let m = &p.div_exact(&g).expect("gcd divides") * q;
    m.monic().1
}

/// Checks normalization: monic leading coefficient.
pub fn is_monic(p: &MultiPoly) -> bool {
    matches!(p.leading(), Some((_, c)) if c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // gcd(x^2 - y^2, x^2 - 2xy + y^2) = x - y
        let a = &x(2, 0).pow(2) - &x(2, 1).pow(2);
        let b = &(&x(2, 0) - &x(2, 1)) * &(&x(2, 0) - &x(2, 1));
        let g = poly_gcd(&a, &b);
        assert_eq!(g, &x(2, 0) - &x(2, 1));
    }

    #[test]
    fn gcd_with_content() {
        // gcd(2x*y, 4x^2) = x (monic normalization removes rational content)
        let a = (&x(2, 0) * &x(2, 1)).scale(&int(2));
        let b = x(2, 0).pow(2).scale(&int(4));
        assert_eq!(poly_gcd(&a, &b), x(2, 0));
    }

    #[test]
    fn coprime_gcd_is_one() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        assert_eq!(poly_gcd(&a, &b), MultiPoly::one(2));
    }

    #[test]
    fn three_variable_gcd() {
        let n = 3;
        let f = &(&x(n, 0) + &x(n, 1)) * &(&x(n, 1) + &x(n, 2));
        let g = &(&x(n, 0) + &x(n, 1)) * &(&x(n, 0) - &x(n, 2));
        assert_eq!(poly_gcd(&f, &g), &x(n, 0) + &x(n, 1));
    }

    #[test]
    fn gcd_zero_cases() {
        let a = (&x(2, 0) + &x(2, 1)).scale(&int(3));
        assert_eq!(poly_gcd(&MultiPoly::zero(2), &a), &x(2, 0) + &x(2, 1));
        assert!(poly_gcd(&MultiPoly::zero(2), &MultiPoly::zero(2)).is_zero());
    }
}
