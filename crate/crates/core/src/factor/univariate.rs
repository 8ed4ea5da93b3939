//! Univariate factorization over the rationals: Yun squarefree decomposition,
//! modular factorization, Hensel lifting, subset recombination.

use super::zp::{factor_mod_p, ZpPoly};
use crate::poly::Rational;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over the rationals (little-endian).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![Rational::one()] }
    }

    pub fn from_int_coeffs(coeffs: Vec<BigInt>) -> Self {
        UniPoly::new(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in out.iter_mut().enumerate() {
            if let Some(a) = self.coeffs.get(i) {
                *c += a;
            }
            if let Some(b) = o.coeffs.get(i) {
                *c += b;
            }
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in out.iter_mut().enumerate() {
            if let Some(a) = self.coeffs.get(i) {
                *c += a;
            }
            if let Some(b) = o.coeffs.get(i) {
                *c -= b;
            }
        }
        UniPoly::new(out)
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = Rational::one() / self.lc();
        self.scale(&inv)
    }

    pub fn divmod(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero());
        if self.degree() < d.degree() || self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        let mut quot = vec![Rational::zero(); self.degree() - dd + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &d.coeffs[dd];
            quot[i - dd] = q.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = &q * dc;
                rem[i - dd + j] -= sub;
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divmod(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.divmod(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*o = g (g monic or zero).
    pub fn ext_gcd(&self, o: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UniPoly::one(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            (r0, s0, t0)
        } else {
            let inv = Rational::one() / r0.lc();
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        }
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Primitive integer form with positive leading coefficient.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            num_gcd = num_gcd.gcd(&(c.numer() * (&denom_lcm / c.denom())));
        }
        if num_gcd.is_zero() {
            num_gcd = BigInt::one();
        }
        let mut out = self.scale(&Rational::new(denom_lcm, num_gcd));
        if out.lc().is_negative() {
            out = out.scale(&-Rational::one());
        }
        out
    }

    /// Squarefree part (product of distinct irreducible factors).
    pub fn squarefree_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).unwrap().primitive()
    }
}

/// Factor a nonzero univariate rational polynomial into primitive integer
/// irreducible factors with multiplicities; the rational unit is dropped.
pub fn factor_univariate(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    assert!(!f.is_zero());
    let mut out: Vec<(UniPoly, usize)> = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    // Yun's squarefree decomposition
    for (g, mult) in yun_squarefree(f) {
        if g.degree() == 0 {
            continue;
        }
        for irr in factor_squarefree(&g.primitive()) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.degree(), format!("{:?}", a.0.coeffs)).cmp(&(b.0.degree(), format!("{:?}", b.0.coeffs)))
    });
    out
}

fn yun_squarefree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let fp = f.derivative();
    let mut a = f.gcd(&fp);
    let mut b = f.div_exact(&a).unwrap();
    let mut c = fp.div_exact(&a).unwrap();
    let mut out = Vec::new();
    let mut i = 1usize;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree() > 0 {
                out.push((b, i));
            }
            break;
        }
        a = b.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        i += 1;
        if b.degree() == 0 {
            break;
        }
    }
    out
}

const PRIMES: &[u64] = &[3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// Zassenhaus on a primitive squarefree integer polynomial.
fn factor_squarefree(f: &UniPoly) -> Vec<UniPoly> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.clone()];
    }
    // strip a root at zero if present (squarefree: at most one)
    if f.coeffs[0].is_zero() {
        let x = UniPoly::new(vec![Rational::zero(), Rational::one()]);
        let rest = f.div_exact(&x).unwrap();
        let mut out = vec![x];
        out.extend(factor_squarefree(&rest.primitive()));
        return out;
    }
    let lc = f.lc().numer().clone();
    let p = PRIMES
        .iter()
        .copied()
        .find(|&p| {
            let bp = BigInt::from(p);
            if (&lc % &bp).is_zero() {
                return false;
            }
            to_zp(f, p).is_squarefree()
        })
        .expect("no suitable factorization prime in the fixed list");
    let modular = factor_mod_p(&to_zp(f, p));
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    // Hensel lift to p^k > 2 * coefficient bound
    let bound = factor_coeff_bound(f) * lc.magnitude();
    let mut pk = BigInt::from(p);
    let mut k = 1u32;
    while pk.magnitude() <= &(bound.clone() * 2u32) {
        pk *= BigInt::from(p);
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);
    recombine(f, &lifted, &pk)
}

fn to_zp(f: &UniPoly, p: u64) -> ZpPoly {
    let bp = BigInt::from(p);
    let coeffs: Vec<u64> = f
        .coeffs
        .iter()
        .map(|c| {
            let r = c.numer().mod_floor(&bp);
            let (_, digits) = r.to_u64_digits();
            digits.first().copied().unwrap_or(0)
        })
        .collect();
    ZpPoly::new(p, coeffs)
}

/// Mignotte-style bound on coefficients of any monic-scaled factor.
fn factor_coeff_bound(f: &UniPoly) -> num_bigint::BigUint {
    let n = f.degree() as u32;
    let norm2: BigInt = f
        .coeffs
        .iter()
        .map(|c| c.numer() * c.numer())
        .sum::<BigInt>()
        .sqrt()
        + 1;
    (BigInt::from(2).pow(n) * norm2).magnitude().clone()
}

/// Integer polynomial with coefficients mod m, little-endian BigInt in
/// symmetric range.
#[derive(Debug, Clone)]
struct ZkPoly {
    coeffs: Vec<BigInt>,
}

impl ZkPoly {
    fn from_zp(f: &ZpPoly) -> ZkPoly {
        ZkPoly { coeffs: f.coeffs.iter().map(|&c| BigInt::from(c)).collect() }
    }

    fn normalize(&mut self, m: &BigInt) {
        for c in self.coeffs.iter_mut() {
            *c = c.mod_floor(m);
        }
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    fn mul(&self, o: &ZkPoly, m: &BigInt) -> ZkPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return ZkPoly { coeffs: vec![] };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut r = ZkPoly { coeffs: out };
        r.normalize(m);
        r
    }

    /// Remainder by a monic divisor, coefficients mod m.
    fn rem_monic(&self, d: &ZkPoly, m: &BigInt) -> ZkPoly {
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            let mut r = ZkPoly { coeffs: rem };
            r.normalize(m);
            return r;
        }
        for i in (dd..rem.len()).rev() {
            let q = rem[i].mod_floor(m);
            if q.is_zero() {
                rem[i] = BigInt::zero();
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let delta = &q * dc;
                rem[i - dd + j] = (&rem[i - dd + j] - delta).mod_floor(m);
            }
        }
        rem.truncate(dd);
        let mut r = ZkPoly { coeffs: rem };
        r.normalize(m);
        r
    }
}

/// Lift the mod-p factorization of f (monic factors) to mod p^k. Returns
/// monic factors mod p^k.
fn hensel_lift(f: &UniPoly, modular: &[ZpPoly], p: u64, k: u32) -> Vec<ZkPoly> {
    let bp = BigInt::from(p);
    // make f monic mod p^k: multiply by lc^{-1}
    let pk = bp.pow(k);
    let lc = f.lc().numer().clone();
    let lc_inv_pk = modinv(&lc, &pk);
    let fz: Vec<BigInt> = f.coeffs.iter().map(|c| (c.numer() * &lc_inv_pk).mod_floor(&pk)).collect();
    let fmonic = ZkPoly { coeffs: fz };

    let mut factors: Vec<ZkPoly> = modular.iter().map(ZkPoly::from_zp).collect();
    // Bezout data mod p: b_i * prod_{j != i} f_j = 1 mod (f_i, p)
    let bez: Vec<ZpPoly> = (0..modular.len())
        .map(|i| {
            let mut prod = ZpPoly::one(p);
            for (j, fj) in modular.iter().enumerate() {
                if j != i {
                    prod = prod.mul(fj).rem(&modular[i]);
                }
            }
            inv_mod_poly(&prod, &modular[i])
        })
        .collect();

    let mut modulus = bp.clone();
    for _ in 1..k {
        let next = &modulus * &bp;
        // error e = (f - prod factors) / modulus  mod p
        let mut prod = ZkPoly { coeffs: vec![BigInt::one()] };
        for fac in &factors {
            prod = prod.mul(fac, &next);
        }
        let mut err = vec![BigInt::zero(); fmonic.coeffs.len().max(prod.coeffs.len())];
        for (i, e) in err.iter_mut().enumerate() {
            let a = fmonic.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = prod.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            *e = (a - b).mod_floor(&next);
        }
        let e_over: Vec<u64> = err
            .iter()
            .map(|c| {
                let q = (c / &modulus).mod_floor(&bp);
                let (_, digits) = q.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        let e_poly = ZpPoly::new(p, e_over);
        for (i, fac) in factors.iter_mut().enumerate() {
            // delta_i = e * b_i mod (f_i, p)
            let fi_p = ZpPoly::new(
                p,
                fac.coeffs
                    .iter()
                    .map(|c| {
                        let r = c.mod_floor(&bp);
                        let (_, d) = r.to_u64_digits();
                        d.first().copied().unwrap_or(0)
                    })
                    .collect(),
            );
            let delta = e_poly.mul(&bez[i]).rem(&fi_p);
            for (j, &dc) in delta.coeffs.iter().enumerate() {
                if j >= fac.coeffs.len() {
                    fac.coeffs.push(BigInt::zero());
                }
                fac.coeffs[j] = (&fac.coeffs[j] + BigInt::from(dc) * &modulus).mod_floor(&next);
            }
        }
        modulus = next;
    }
    factors
}

fn inv_mod_poly(a: &ZpPoly, m: &ZpPoly) -> ZpPoly {
    // extended euclid over Z/p[x]
    let p = a.p;
    let (mut r0, mut r1) = (m.clone(), a.rem(m));
    let (mut t0, mut t1) = (ZpPoly::zero(p), ZpPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1);
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.degree(), 0, "factor not invertible: non-coprime moduli");
    t0.scale_inv(r0.lc())
}

impl ZpPoly {
    fn scale_inv(&self, c: u64) -> ZpPoly {
        let p = self.p;
        let mut inv = 1u64;
        let mut base = c % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                inv = ((inv as u128 * base as u128) % p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % p as u128) as u64;
            e >>= 1;
        }
        self.scale(inv)
    }
}

fn modinv(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "lc not invertible mod p^k");
    e.x.mod_floor(m)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Try subset products of the lifted factors to reconstruct true factors.
fn recombine(f: &UniPoly, lifted: &[ZkPoly], pk: &BigInt) -> Vec<UniPoly> {
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut card = 1usize;
    'outer: while 2 * card <= remaining.len() {
        let subsets = subsets_of(&remaining, card);
        for s in subsets {
            let lc = rest.lc();
            // candidate = lc * prod, in symmetric residue, primitive part
            let mut prod = ZkPoly { coeffs: vec![lc.numer().clone()] };
            for &i in &s {
                prod = prod.mul(&lifted[i], pk);
            }
            let cand = UniPoly::new(
                prod.coeffs.iter().map(|c| Rational::from_integer(symmetric(c, pk))).collect(),
            )
            .primitive();
            if cand.degree() == 0 {
                continue;
            }
            if let Some(q) = rest.div_exact(&cand) {
                out.push(cand);
                rest = q.primitive();
                remaining.retain(|i| !s.contains(i));
                continue 'outer;
            }
        }
        card += 1;
    }
    if rest.degree() > 0 {
        out.push(rest.primitive());
    }
    out
}

fn subsets_of(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
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
    use crate::poly::{rat, rat_frac};

    fn upoly(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn factors_quadratic_split() {
        // x^2 - 1
        let f = upoly(&[-1, 0, 1]);
        let fs = factor_univariate(&f);
        assert_eq!(fs.len(), 2);
        for (g, m) in &fs {
            assert_eq!(g.degree(), 1);
            assert_eq!(*m, 1);
        }
    }

    #[test]
    fn factors_with_multiplicity() {
        // (x-1)^2 (x^2+1)
        let f = upoly(&[1, -2, 1]).mul(&upoly(&[1, 0, 1]));
        let fs = factor_univariate(&f);
        let mut degs: Vec<(usize, usize)> = fs.iter().map(|(g, m)| (g.degree(), *m)).collect();
        degs.sort();
        assert_eq!(degs, vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn irreducible_stays_whole() {
        // x^4 + x + 1 is irreducible over Q
        let f = upoly(&[1, 1, 0, 0, 1]);
        let fs = factor_univariate(&f);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].0.degree(), 4);
    }

    #[test]
    fn zassenhaus_needs_recombination() {
        // (x^2 - 2)(x^2 - 3): splits into four linears mod some primes
        let f = upoly(&[-2, 0, 1]).mul(&upoly(&[-3, 0, 1]));
        let fs = factor_univariate(&f);
        let mut degs: Vec<usize> = fs.iter().map(|(g, _)| g.degree()).collect();
        degs.sort();
        assert_eq!(degs, vec![2, 2]);
    }

    #[test]
    fn rational_coefficients_and_root_at_zero() {
        // 1/2 x (x + 3/2)
        let f = UniPoly::new(vec![rat(0), rat_frac(3, 4), rat_frac(1, 2)]);
        let fs = factor_univariate(&f);
        assert_eq!(fs.len(), 2);
        let prod = fs.iter().fold(UniPoly::one(), |acc, (g, _)| acc.mul(g));
        assert_eq!(prod.degree(), 2);
    }

    #[test]
    fn degree_six_mixed() {
        // (x^3 - 2)(x - 1)(x^2 + x + 1)
        let f = upoly(&[-2, 0, 0, 1]).mul(&upoly(&[-1, 1])).mul(&upoly(&[1, 1, 1]));
        let fs = factor_univariate(&f);
        let mut degs: Vec<usize> = fs.iter().map(|(g, _)| g.degree()).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2, 3]);
    }
}
