//! Bivariate factorization over the rationals: monicize, evaluate, factor the
//! fiber, Hensel lift along the evaluation point, recombine subsets.

use super::gcd::{content_in_var, multi_gcd};
use super::univariate::{factor_univariate, UniPoly};
use crate::poly::{Monomial, Polynomial, Rational, Ring};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Arc;

/// Internal dense-in-y representation: sum coeffs[j](x) * y^j.
#[derive(Debug, Clone, PartialEq)]
struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg_y(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn deg_x(&self) -> usize {
        self.coeffs.iter().map(|c| c.degree()).max().unwrap_or(0)
    }

    fn lc_y(&self) -> &UniPoly {
        self.coeffs.last().unwrap()
    }

    fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() || o.is_zero() {
            return BiPoly::new(vec![]);
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(out)
    }

    fn mul_trunc(&self, o: &BiPoly, xk: usize) -> BiPoly {
        let mut r = self.mul(o);
        r.truncate_x(xk);
        r
    }

    fn sub(&self, o: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![UniPoly::zero(); n];
        for (i, c) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero);
            let b = o.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero);
            *c = a.sub(&b);
        }
        BiPoly::new(out)
    }

    fn truncate_x(&mut self, xk: usize) {
        for c in self.coeffs.iter_mut() {
            c.coeffs.truncate(xk);
            *c = UniPoly::new(std::mem::take(&mut c.coeffs));
        }
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    /// Coefficient of x^k as a polynomial in y.
    fn x_coefficient(&self, k: usize) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.coeffs.get(k).cloned().unwrap_or_else(Rational::zero))
                .collect(),
        )
    }

    fn eval_x(&self, a: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(a)).collect())
    }

    /// Taylor shift x -> x + a.
    fn shift_x(&self, a: &Rational) -> BiPoly {
        BiPoly::new(self.coeffs.iter().map(|c| shift_uni(c, a)).collect())
    }

    /// Division in y by a divisor monic in y; exact polynomial arithmetic.
    fn divmod_monic_y(&self, d: &BiPoly) -> (BiPoly, BiPoly) {
        assert!(d.lc_y().degree() == 0 && d.lc_y().lc().is_one(), "divisor must be monic in y");
        let dd = d.deg_y();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (BiPoly::new(vec![]), self.clone());
        }
        let mut quot = vec![UniPoly::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = rem[i].clone();
            if q.is_zero() {
                continue;
            }
            quot[i - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].sub(&q.mul(dc));
            }
        }
        (BiPoly::new(quot), BiPoly::new(rem))
    }

    fn from_poly(p: &Polynomial, vx: usize, vy: usize) -> BiPoly {
        let dy = p.degree_in(vy) as usize;
        let mut out = vec![Vec::new(); dy + 1];
        for (m, c) in p.terms() {
            let ex = m.0[vx] as usize;
            let ey = m.0[vy] as usize;
            if out[ey].len() <= ex {
                out[ey].resize(ex + 1, Rational::zero());
            }
            out[ey][ex] = c.clone();
        }
        BiPoly::new(out.into_iter().map(UniPoly::new).collect())
    }

    fn to_poly(&self, ring: &Arc<Ring>, vx: usize, vy: usize) -> Polynomial {
        let n = ring.nvars();
        let mut p = Polynomial::zero(ring);
        for (ey, c) in self.coeffs.iter().enumerate() {
            for (ex, a) in c.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut e = vec![0u32; n];
                e[vx] = ex as u32;
                e[vy] = ey as u32;
                p.add_term(Monomial(e), a.clone());
            }
        }
        p
    }
}

fn shift_uni(c: &UniPoly, a: &Rational) -> UniPoly {
    // f(x + a) via Horner: process from the top coefficient down
    let mut acc = UniPoly::zero();
    let xa = UniPoly::new(vec![a.clone(), Rational::one()]);
    for coeff in c.coeffs.iter().rev() {
        acc = acc.mul(&xa).add(&UniPoly::new(vec![coeff.clone()]));
    }
    acc
}

/// Full factorization into primitive irreducible factors with multiplicities.
/// Supports polynomials whose support touches at most two variables (the
/// ambient ring may be larger). The rational unit is dropped.
pub fn factor_multivariate(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let ring = p.ring().clone();
    let n = ring.nvars();
    let mut work = p.clone();
    let mut out: Vec<(Polynomial, usize)> = Vec::new();

    // monomial content first
    for v in 0..n {
        let min_e = work.terms().map(|(m, _)| m.0[v]).min().unwrap_or(0);
        if min_e > 0 {
            out.push((Polynomial::var(&ring, v), min_e as usize));
            let divisor = Polynomial::var(&ring, v).pow(min_e);
            work = work.div_exact(&divisor).unwrap();
        }
    }

    let active: Vec<usize> = (0..n).filter(|&v| work.degree_in(v) > 0).collect();
    match active.len() {
        0 => out,
        1 => {
            let v = active[0];
            let uni = poly_to_uni(&work, v);
            for (g, m) in factor_univariate(&uni) {
                out.push((uni_to_poly(&g, &ring, v), m));
            }
            out
        }
        2 => {
            let (vx, vy) = pick_main_vars(&work, active[0], active[1]);
            // content in y lives in x only: recurse on it
            let cont = content_in_var(&work, vy);
            if !cont.is_constant() {
                for fac in factor_multivariate(&cont) {
                    out.push(fac);
                }
            }
            let prim = work.div_exact(&cont).unwrap();
            let sqf = squarefree_part_2v(&prim, vy);
            let irr = factor_squarefree_bivariate(&sqf, &ring, vx, vy);
            // multiplicities by trial division against the primitive part
            let mut rest = prim;
            for g in irr {
                let mut m = 0usize;
                while let Some(q) = rest.div_exact(&g) {
                    rest = q;
                    m += 1;
                }
                assert!(m >= 1, "factor does not divide input");
                out.push((g, m));
            }
            out
        }
        _ => panic!("factorization limited to two active variables"),
    }
}

/// Product of the distinct irreducible factors.
pub fn squarefree_part(p: &Polynomial) -> Polynomial {
    let ring = p.ring().clone();
    factor_multivariate(p)
        .into_iter()
        .fold(Polynomial::one(&ring), |acc, (g, _)| &acc * &g)
}

fn pick_main_vars(p: &Polynomial, a: usize, b: usize) -> (usize, usize) {
    // prefer a main variable with constant leading coefficient
    let lc_const = |main: usize, other: usize| {
        let d = p.degree_in(main);
        p.terms().filter(|(m, _)| m.0[main] == d).all(|(m, _)| m.0[other] == 0)
    };
    if lc_const(b, a) {
        (a, b)
    } else if lc_const(a, b) {
        (b, a)
    } else {
        (a, b)
    }
}

fn poly_to_uni(p: &Polynomial, v: usize) -> UniPoly {
    let d = p.degree_in(v) as usize;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (m, c) in p.terms() {
        coeffs[m.0[v] as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

fn uni_to_poly(u: &UniPoly, ring: &Arc<Ring>, v: usize) -> Polynomial {
    let n = ring.nvars();
    let mut p = Polynomial::zero(ring);
    for (e, c) in u.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut exps = vec![0u32; n];
        exps[v] = e as u32;
        p.add_term(Monomial(exps), c.clone());
    }
    p
}

fn squarefree_part_2v(p: &Polynomial, vy: usize) -> Polynomial {
    let dy = p.partial_derivative(vy);
    let g = multi_gcd(p, &dy);
    p.div_exact(&g).unwrap().primitive_part()
}

/// Factor a squarefree bivariate polynomial, primitive in vy, with
/// deg_vy >= 1, into irreducible factors.
fn factor_squarefree_bivariate(
    s: &Polynomial,
    ring: &Arc<Ring>,
    vx: usize,
    vy: usize,
) -> Vec<Polynomial> {
    let f = BiPoly::from_poly(s, vx, vy);
    if f.deg_y() == 1 {
        return vec![s.primitive_part()];
    }
    // monicize in y: M = L^(m-1) * s(x, y/L)
    let lc = f.lc_y().clone();
    let m = f.deg_y();
    let monic = if lc.degree() == 0 {
        let inv = Rational::one() / lc.lc();
        BiPoly::new(f.coeffs.iter().map(|c| c.scale(&inv)).collect())
    } else {
        // M = L^(m-1) * s(x, y/L): coefficient of y^j is c_j * L^(m-1-j)
        let mut lpow = vec![UniPoly::one(); m];
        for j in 1..m {
            lpow[j] = lpow[j - 1].mul(&lc);
        }
        let coeffs = f
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if j == m { UniPoly::one() } else { c.mul(&lpow[m - 1 - j]) })
            .collect();
        BiPoly::new(coeffs)
    };

    // choose an evaluation point a with squarefree fiber
    let mut a = Rational::zero();
    let mut k = 0i64;
    let fiber = loop {
        let cand = Rational::from_integer(BigInt::from(k));
        let u = monic.eval_x(&cand);
        if u.degree() == monic.deg_y() && u.gcd(&u.derivative()).degree() == 0 {
            a = cand;
            break u;
        }
        k = if k >= 0 { -(k + 1) } else { -k };
        assert!(k.abs() < 1000, "no squarefree fiber found");
    };

    let shifted = monic.shift_x(&a);
    let fiber_factors: Vec<UniPoly> =
        factor_univariate(&fiber).into_iter().map(|(g, _)| g.monic()).collect();
    if fiber_factors.len() == 1 {
        return vec![s.primitive_part()];
    }

    let xk = shifted.deg_x() + 1;
    let lifted = hensel_lift_x(&shifted, &fiber_factors, xk);
    let monic_factors = recombine_bivariate(&shifted, &lifted, xk);

    // map factors back: unshift, undo monicization, take primitive parts
    let mut out = Vec::new();
    for g in monic_factors {
        let unshifted = g.shift_x(&(-a.clone()));
        let mapped = if lc.degree() == 0 {
            unshifted
        } else {
            // y -> L*y then strip content in x
            let dg = unshifted.deg_y();
            let mut lpow = vec![UniPoly::one(); dg + 1];
            for j in 1..=dg {
                lpow[j] = lpow[j - 1].mul(&lc);
            }
            BiPoly::new(
                unshifted.coeffs.iter().enumerate().map(|(j, c)| c.mul(&lpow[j])).collect(),
            )
        };
        let poly = mapped.to_poly(ring, vx, vy);
        let cont = content_in_var(&poly, vy);
        out.push(poly.div_exact(&cont).unwrap().primitive_part());
    }
    // sanity: product reassembles s up to a unit
    let prod = out.iter().fold(Polynomial::one(ring), |acc, g| &acc * g);
    debug_assert!(s.div_exact(&prod).map(|q| q.is_constant()).unwrap_or(false));
    out
}

/// Lift F = prod u_i from mod x to mod x^xk. F monic in y, u_i monic and
/// pairwise coprime.
fn hensel_lift_x(f: &BiPoly, fiber: &[UniPoly], xk: usize) -> Vec<BiPoly> {
    // Bezout: b_i * prod_{j!=i} u_j = 1 mod u_i
    let bez: Vec<UniPoly> = (0..fiber.len())
        .map(|i| {
            let mut prod = UniPoly::one();
            for (j, u) in fiber.iter().enumerate() {
                if j != i {
                    prod = prod.mul(u).divmod(&fiber[i]).1;
                }
            }
            let (g, s, _) = prod.ext_gcd(&fiber[i]);
            assert_eq!(g.degree(), 0, "fiber factors not coprime");
            s.divmod(&fiber[i]).1
        })
        .collect();

    let mut factors: Vec<BiPoly> =
        fiber.iter().map(|u| BiPoly::new(u.coeffs.iter().map(|c| UniPoly::new(vec![c.clone()])).collect())).collect();

    for k in 1..xk {
        let mut prod = BiPoly::new(vec![UniPoly::one()]);
        for fac in &factors {
            prod = prod.mul_trunc(fac, k + 1);
        }
        let err = f.sub(&prod);
        let e_k = err.x_coefficient(k);
        if e_k.is_zero() {
            continue;
        }
        for (i, fac) in factors.iter_mut().enumerate() {
            let delta = e_k.mul(&bez[i]).divmod(&fiber[i]).1;
            if delta.is_zero() {
                continue;
            }
            // fac += x^k * delta(y)
            for (j, dc) in delta.coeffs.iter().enumerate() {
                if dc.is_zero() {
                    continue;
                }
                while fac.coeffs.len() <= j {
                    fac.coeffs.push(UniPoly::zero());
                }
                let mut xs = vec![Rational::zero(); k + 1];
                xs[k] = dc.clone();
                fac.coeffs[j] = fac.coeffs[j].add(&UniPoly::new(xs));
            }
        }
    }
    factors
}

fn recombine_bivariate(f: &BiPoly, lifted: &[BiPoly], xk: usize) -> Vec<BiPoly> {
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut card = 1usize;
    'outer: while 2 * card <= remaining.len() {
        for s in subsets_of(&remaining, card) {
            let mut cand = BiPoly::new(vec![UniPoly::one()]);
            for &i in &s {
                cand = cand.mul_trunc(&lifted[i], xk);
            }
            let (q, r) = rest.divmod_monic_y(&cand);
            if r.is_zero() {
                out.push(cand);
                rest = q;
                remaining.retain(|i| !s.contains(i));
                continue 'outer;
            }
        }
        card += 1;
    }
    if rest.deg_y() > 0 {
        out.push(rest);
    }
    out
}

fn subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n || k == 0 {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut i = k;
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break true;
            }
        };
        if !advanced {
            return out;
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn sorted_display(fs: &[(Polynomial, usize)]) -> Vec<(String, usize)> {
        let mut v: Vec<(String, usize)> = fs.iter().map(|(p, m)| (p.to_string(), *m)).collect();
        v.sort();
        v
    }

    #[test]
    fn splits_difference_of_squares() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("x^2 - y^2", &r).unwrap();
        let fs = factor_multivariate(&p);
        assert_eq!(fs.len(), 2);
        for (g, m) in &fs {
            assert_eq!(g.degree(), 1);
            assert_eq!(*m, 1);
        }
    }

    #[test]
    fn cusp_is_irreducible() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("y^2 - x^3", &r).unwrap();
        let fs = factor_multivariate(&p);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
        assert_eq!(fs[0].0, p.primitive_part());
    }

    #[test]
    fn monomial_and_multiplicity() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("x*y^2*(x+y)^2", &r).unwrap();
        let fs = factor_multivariate(&p);
        let d = sorted_display(&fs);
        assert_eq!(
            d,
            vec![("x".to_string(), 1), ("x + y".to_string(), 2), ("y".to_string(), 2)]
        );
    }

    #[test]
    fn nonmonic_leading_coefficient() {
        let r = Ring::new(vec!["x", "y"]);
        // (x*y + 1)(y - x^2): lc in y is x
        let p = parse("(x*y + 1)*(y - x^2)", &r).unwrap();
        let fs = factor_multivariate(&p);
        assert_eq!(fs.len(), 2);
        let prod = fs.iter().fold(Polynomial::one(&r), |acc, (g, m)| {
            let mut t = acc;
            for _ in 0..*m {
                t = &t * g;
            }
            t
        });
        assert_eq!(prod.primitive_part(), p.primitive_part());
    }

    #[test]
    fn node_splits_conjugate_stays() {
        let r = Ring::new(vec!["x", "y"]);
        let node = parse("y^2 - x^2", &r).unwrap();
        assert_eq!(factor_multivariate(&node).len(), 2);
        let irr = parse("y^2 - 2*x^2", &r).unwrap();
        assert_eq!(factor_multivariate(&irr).len(), 1);
    }

    #[test]
    fn three_factor_mix_in_big_ring() {
        let r = Ring::new(vec!["x", "y", "z"]);
        // support only in (x, z)
        let p = parse("(z - x^2)*(z + x^2)*(z - 1)", &r).unwrap();
        let fs = factor_multivariate(&p);
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn squarefree_part_works() {
        let r = Ring::new(vec!["x", "y"]);
        let p = parse("y^2*(y - x^2)^3", &r).unwrap();
        let s = squarefree_part(&p);
        assert_eq!(s.primitive_part(), parse("y*(y - x^2)", &r).unwrap().primitive_part());
    }
}
