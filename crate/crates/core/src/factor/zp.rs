//! Dense univariate arithmetic over small prime fields, used by the
//! modular factorization pipeline.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Polynomial over Z/p, dense little-endian coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZpPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

impl ZpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ZpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ZpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ZpPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        ZpPoly { p, coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &ZpPoly) -> ZpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = addm(a, b, self.p);
        }
        ZpPoly::new(self.p, out)
    }

    pub fn sub(&self, other: &ZpPoly) -> ZpPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = subm(a, b, self.p);
        }
        ZpPoly::new(self.p, out)
    }

    pub fn mul(&self, other: &ZpPoly) -> ZpPoly {
        if self.is_zero() || other.is_zero() {
            return ZpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = addm(out[i + j], mulm(a, b, self.p), self.p);
            }
        }
        ZpPoly::new(self.p, out)
    }

    pub fn scale(&self, c: u64) -> ZpPoly {
        ZpPoly::new(self.p, self.coeffs.iter().map(|&a| mulm(a, c, self.p)).collect())
    }

    pub fn monic(&self) -> ZpPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(invm(self.lc(), self.p))
    }

    pub fn divmod(&self, d: &ZpPoly) -> (ZpPoly, ZpPoly) {
        assert!(!d.is_zero());
        let p = self.p;
        let mut rem = self.coeffs.clone();
        let dd = d.degree();
        if self.degree() < dd || self.is_zero() {
            return (ZpPoly::zero(p), self.clone());
        }
        let mut quot = vec![0u64; self.degree() - dd + 1];
        let dlc_inv = invm(d.lc(), p);
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let q = mulm(c, dlc_inv, p);
            quot[i - dd] = q;
            for (j, &dc) in d.coeffs.iter().enumerate() {
                rem[i - dd + j] = subm(rem[i - dd + j], mulm(q, dc, p), p);
            }
        }
        (ZpPoly::new(p, quot), ZpPoly::new(p, rem))
    }

    pub fn rem(&self, d: &ZpPoly) -> ZpPoly {
        self.divmod(d).1
    }

    pub fn gcd(&self, other: &ZpPoly) -> ZpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> ZpPoly {
        if self.coeffs.len() <= 1 {
            return ZpPoly::zero(self.p);
        }
        let out: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, (i as u64) % self.p, self.p))
            .collect();
        ZpPoly::new(self.p, out)
    }

    pub fn pow_mod(&self, mut e: u64, m: &ZpPoly) -> ZpPoly {
        let mut base = self.rem(m);
        let mut acc = ZpPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }
}

/// Distinct-degree then equal-degree factorization of a squarefree monic
/// polynomial mod p. Deterministically seeded.
pub fn factor_mod_p(f: &ZpPoly) -> Vec<ZpPoly> {
    let f = f.monic();
    let p = f.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = ZpPoly::x(p);
    let mut d = 1usize;
    while rest.degree() >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&ZpPoly::x(p)));
        if g.degree() > 0 {
            equal_degree_split(&g, d, &mut out, &mut rng);
            rest = rest.divmod(&g).0.monic();
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.degree() > 0 {
        out.push(rest);
    }
    out.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    out
}

fn equal_degree_split(f: &ZpPoly, d: usize, out: &mut Vec<ZpPoly>, rng: &mut ChaCha8Rng) {
    if f.degree() == d {
        out.push(f.monic());
        return;
    }
    let p = f.p;
    // Cantor-Zassenhaus: random t, compute t^((p^d-1)/2) - 1 and take a gcd
    loop {
        let deg = f.degree();
        let coeffs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
        let t = ZpPoly::new(p, coeffs);
        if t.is_zero() {
            continue;
        }
        // exponent (p^d - 1)/2 via repeated squaring with bigint-free ladder:
        // compute t^(p^d) in stages using Frobenius powers
        let mut e = t.clone();
        for _ in 0..d {
            e = e.pow_mod(p, f);
        }
        // now e = t^(p^d) = t mod any degree-d factor; instead use the direct
        // exponent ladder on (p^d-1)/2 with u128 if it fits, else stage-wise
        let exp: Option<u64> = p.checked_pow(d as u32).map(|x| (x - 1) / 2);
        let g = match exp {
            Some(e2) => {
                let s = t.pow_mod(e2, f);
                f.gcd(&s.sub(&ZpPoly::one(p)))
            }
            None => {
                // p^d too large for u64: use ((p-1)/2) * (1 + p + ... + p^(d-1))
                // staged as norm-like product
                let mut acc = t.clone();
                let mut frob = t.clone();
                for _ in 1..d {
                    frob = frob.pow_mod(p, f);
                    acc = acc.mul(&frob).rem(f);
                }
                let s = acc.pow_mod((p - 1) / 2, f);
                f.gcd(&s.sub(&ZpPoly::one(p)))
            }
        };
        if g.degree() > 0 && g.degree() < f.degree() {
            equal_degree_split(&g, d, out, rng);
            equal_degree_split(&f.divmod(&g).0.monic(), d, out, rng);
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_mod_small_prime() {
        // x^2 - 1 = (x-1)(x+1) mod 7
        let f = ZpPoly::new(7, vec![6, 0, 1]);
        let fs = factor_mod_p(&f);
        assert_eq!(fs.len(), 2);
        let prod = fs[0].mul(&fs[1]);
        assert_eq!(prod, f.monic());
    }

    #[test]
    fn factor_irreducible_quadratic() {
        // x^2 + 1 mod 7 is irreducible (7 = 3 mod 4)
        let f = ZpPoly::new(7, vec![1, 0, 1]);
        let fs = factor_mod_p(&f);
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn factor_mixed_degrees() {
        // (x-2)(x^2+1)(x^2+x+4) mod 13; x^2+1 splits since -1 is a square,
        // x^2+x+4 stays irreducible (disc = -15 = 11 is a non-residue)
        let a = ZpPoly::new(13, vec![11, 1]);
        let b = ZpPoly::new(13, vec![1, 0, 1]);
        let c = ZpPoly::new(13, vec![4, 1, 1]);
        let f = a.mul(&b).mul(&c);
        assert!(f.is_squarefree());
        let fs = factor_mod_p(&f);
        let mut prod = ZpPoly::one(13);
        for g in &fs {
            prod = prod.mul(g);
        }
        assert_eq!(prod, f.monic());
        assert_eq!(fs.len(), 4);
        let degs: Vec<usize> = fs.iter().map(|g| g.degree()).collect();
        assert_eq!(degs, vec![1, 1, 1, 2]);
    }
}
