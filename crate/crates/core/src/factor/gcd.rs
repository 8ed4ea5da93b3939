//! Multivariate gcd over the rationals via primitive PRS, recursing on the
//! number of variables.

use crate::poly::{Monomial, Polynomial, Rational, Ring};
use num_traits::{One, Zero};
use std::sync::Arc;

/// Gcd of two polynomials, normalized to primitive integer form. Zero inputs
/// behave as usual: gcd(p, 0) = primitive part of p.
pub fn multi_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert_eq!(a.ring(), b.ring(), "ambient ring mismatch");
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    // pick the active variable: one actually appearing in either
    let n = a.nvars();
    let var = (0..n).find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0);
    let var = match var {
        Some(v) => v,
        None => return Polynomial::one(a.ring()), // both constants
    };
    gcd_in_var(a, b, var).primitive_part()
}

pub fn gcd_many(polys: &[Polynomial]) -> Polynomial {
    let mut it = polys.iter();
    let first = match it.next() {
        Some(p) => p.clone(),
        None => panic!("gcd of empty list"),
    };
    let mut acc = first.primitive_part();
    for p in it {
        if acc.is_constant() && !acc.is_zero() {
            return acc;
        }
        acc = multi_gcd(&acc, p);
    }
    acc
}

/// View `p` as a univariate polynomial in `var` with polynomial coefficients.
fn coeffs_in_var(p: &Polynomial, var: usize) -> Vec<Polynomial> {
    let ring = p.ring();
    let d = p.degree_in(var) as usize;
    let mut out = vec![Polynomial::zero(ring); d + 1];
    for (m, c) in p.terms() {
        let e = m.0[var] as usize;
        let mut m2 = m.clone();
        m2.0[var] = 0;
        out[e].add_term(m2, c.clone());
    }
    out
}

fn from_coeffs_in_var(ring: &Arc<Ring>, coeffs: &[Polynomial], var: usize) -> Polynomial {
    let mut out = Polynomial::zero(ring);
    for (e, c) in coeffs.iter().enumerate() {
        for (m, a) in c.terms() {
            let mut m2 = m.clone();
            m2.0[var] += e as u32;
            out.add_term(m2, a.clone());
        }
    }
    out
}

/// Content of `p` w.r.t. `var`: gcd of its coefficients as polynomials in the
/// remaining variables.
pub fn content_in_var(p: &Polynomial, var: usize) -> Polynomial {
    let coeffs: Vec<Polynomial> = coeffs_in_var(p, var).into_iter().filter(|c| !c.is_zero()).collect();
    gcd_many(&coeffs)
}

fn gcd_in_var(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let ring = a.ring().clone();
    let ca = content_in_var(a, var);
    let cb = content_in_var(b, var);
    let cont = multi_gcd(&ca, &cb);
    let pa = a.div_exact(&ca).unwrap();
    let pb = b.div_exact(&cb).unwrap();
    let prim = gcd_primitive_prs(&pa, &pb, var, &ring);
    &cont * &prim
}

/// Primitive PRS on two polynomials primitive w.r.t. `var`.
fn gcd_primitive_prs(a: &Polynomial, b: &Polynomial, var: usize, ring: &Arc<Ring>) -> Polynomial {
    let mut f = a.clone();
    let mut g = b.clone();
    if f.degree_in(var) < g.degree_in(var) {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_zero() {
            return primitive_in_var(&f, var);
        }
        if g.degree_in(var) == 0 {
            // a nonzero "constant" in the var: gcd of primitive parts is content-level
            return Polynomial::one(ring);
        }
        let r = pseudo_rem(&f, &g, var, ring);
        f = g;
        g = primitive_in_var(&r, var);
    }
}

fn primitive_in_var(p: &Polynomial, var: usize) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in_var(p, var);
    p.div_exact(&c).unwrap().primitive_part()
}

/// Pseudo-remainder of f by g w.r.t. `var` (deg f >= deg g >= 1).
fn pseudo_rem(f: &Polynomial, g: &Polynomial, var: usize, ring: &Arc<Ring>) -> Polynomial {
    let df = f.degree_in(var);
    let dg = g.degree_in(var);
    let gc = coeffs_in_var(g, var);
    let lc_g = gc[dg as usize].clone();
    let mut rem = f.clone();
    let mut d = df;
    while !rem.is_zero() && d >= dg {
        let rc = coeffs_in_var(&rem, var);
        if rc.len() <= d as usize || rc[d as usize].is_zero() {
            if d == 0 {
                break;
            }
            d -= 1;
            continue;
        }
        let lead = rc[d as usize].clone();
        // rem := lc_g * rem - lead * x^(d-dg) * g
        let shift = Polynomial::monomial(
            ring,
            Monomial({
                let mut e = vec![0u32; ring.nvars()];
                e[var] = d - dg;
                e
            }),
            Rational::one(),
        );
        rem = &(&rem * &lc_g) - &(&(&lead * &shift) * g);
        if rem.is_zero() {
            break;
        }
        if d == 0 {
            break;
        }
        d -= 1;
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn bivariate_gcd() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("(x+y)*(x-y)", &r).unwrap();
        let q = parse("(x+y)*(x^2+1)", &r).unwrap();
        assert_eq!(multi_gcd(&p, &q), parse("x+y", &r).unwrap());
    }

    #[test]
    fn gcd_with_multiplicity() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("y^2*x", &r).unwrap();
        let q = parse("y^3", &r).unwrap();
        assert_eq!(multi_gcd(&p, &q), parse("y^2", &r).unwrap());
    }

    #[test]
    fn trivariate_gcd() {
        let r = Ring::new(vec!["x", "y", "z"]);
        let d = parse("x*y - z^2", &r).unwrap();
        let p = parse("(x*y - z^2)*(x + z)", &r).unwrap();
        let q = parse("(x*y - z^2)*(y - 1)", &r).unwrap();
        assert_eq!(multi_gcd(&p, &q), d);
    }

    #[test]
    fn coprime_gcd_is_one() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("x^2 + y", &r).unwrap();
        let q = parse("y^2 - x", &r).unwrap();
        assert!(multi_gcd(&p, &q).is_constant());
    }

    #[test]
    fn gcd_of_generators() {
        let r = Ring::new(vec!["x", "y"]);
        let gens = vec![parse("x^2*y^3", &r).unwrap(), parse("x^3*y^2", &r).unwrap()];
        assert_eq!(gcd_many(&gens), parse("x^2*y^2", &r).unwrap());
    }
}
