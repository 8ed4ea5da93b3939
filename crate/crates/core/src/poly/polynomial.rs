use super::{Monomial, MonomialOrder, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Ambient polynomial ring descriptor: just the variable names. Two rings are
/// the same iff their variable lists agree; mismatches are hard errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Arc<Ring> {
        Arc::new(Ring { vars: vars.into_iter().map(Into::into).collect() })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.vars[idx]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// New ring with extra variables appended.
    pub fn extend<S: Into<String>>(&self, extra: Vec<S>) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        vars.extend(extra.into_iter().map(Into::into));
        Arc::new(Ring { vars })
    }
}

fn assert_same_ring(a: &Polynomial, b: &Polynomial) {
    assert_eq!(
        a.ring.vars, b.ring.vars,
        "ambient ring mismatch: [{}] vs [{}]",
        a.ring.vars.join(","),
        b.ring.vars.join(",")
    );
}

/// Sparse multivariate polynomial over the rationals in canonical form: no
/// zero coefficients, terms keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<Ring>, idx: usize) -> Self {
        assert!(idx < ring.nvars());
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), idx), Rational::one());
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_terms(ring: &Arc<Ring>, it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Order at the origin: minimal total degree of a term.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars());
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] = e - 1;
            out.add_term(m2, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[v];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Substitute `replacement[v]` for each variable `v`. The replacements
    /// live in `target` (which may be a different ring).
    pub fn substitute(&self, target: &Arc<Ring>, replacement: &[Polynomial]) -> Polynomial {
        assert_eq!(replacement.len(), self.nvars());
        let mut acc = Polynomial::zero(target);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = replacement
            .iter()
            .map(|r| vec![Polynomial::one(target), r.clone()])
            .collect();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[v].len() <= e as usize {
                    let next = &powers[v][powers[v].len() - 1] * &replacement[v];
                    powers[v].push(next);
                }
                t = &t * &powers[v][e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Move this polynomial into `target`, mapping variable `v` to variable
    /// `var_map[v]` of the target ring.
    pub fn map_vars(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.nvars());
        let n = target.nvars();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; n];
            for (v, &ex) in m.0.iter().enumerate() {
                e[var_map[v]] += ex;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Strip rational content: returns the primitive integer-coefficient
    /// associate with positive leading (in the canonical BTreeMap sense)
    /// coefficient. Zero maps to zero.
    pub fn primitive_part(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&denom_lcm / c.denom());
            num_gcd = num_gcd.gcd(&n);
        }
        if num_gcd.is_zero() {
            num_gcd = BigInt::one();
        }
        let scale = Rational::new(denom_lcm, num_gcd);
        let mut out = self.scale(&scale);
        // normalize sign on the last (canonically largest) term
        if let Some((_, c)) = out.terms.iter().next_back() {
            if c.is_negative() {
                out = out.scale(&-Rational::one());
            }
        }
        out
    }

    /// Make the leading coefficient 1 with respect to `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rational::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Exact division by `divisor`; None if not divisible.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_same_ring(self, divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let order = MonomialOrder::degrevlex(self.nvars());
        let (dm, dc) = {
            let (m, c) = divisor.leading_term(&order).unwrap();
            (m.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while !rem.is_zero() {
            let (lm, lc) = {
                let (m, c) = rem.leading_term(&order).unwrap();
                (m.clone(), c.clone())
            };
            if !dm.divides(&lm) {
                return None;
            }
            let qm = dm.div(&lm);
            let qc = lc / &dc;
            let t = Polynomial::monomial(&self.ring, qm, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Canonical display with terms sorted descending by `order`.
    pub fn display(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -(*c).clone() } else { (*c).clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.display_monomial(m);
            if mono.is_empty() {
                out.push_str(&format!("{}", abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", abs, mono));
            }
        }
        out
    }

    fn display_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (v, &e) in m.0.iter().enumerate() {
            if e == 1 {
                parts.push(self.ring.var_name(v).to_string());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.ring.var_name(v), e));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&MonomialOrder::degrevlex(self.nvars())))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_same_ring(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_same_ring(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_same_ring(self, rhs);
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse, rat};

    fn ring2() -> Arc<Ring> {
        Ring::new(vec!["x", "y"])
    }

    #[test]
    fn derivative_power_rule() {
        let r = ring2();
        let p = parse("x^2*y", &r).unwrap();
        assert_eq!(p.partial_derivative(0), parse("2*x*y", &r).unwrap());
        let q = parse("y^2 - x^3", &r).unwrap();
        assert_eq!(q.partial_derivative(1), parse("2*y", &r).unwrap());
        let c = parse("5", &r).unwrap();
        assert!(c.partial_derivative(0).is_zero());
    }

    #[test]
    fn product_degree_adds() {
        let r = ring2();
        let a = parse("x^2 + y", &r).unwrap();
        let b = parse("x*y - 3", &r).unwrap();
        assert_eq!((&a * &b).degree(), a.degree() + b.degree());
    }

    #[test]
    fn exact_division() {
        let r = ring2();
        let a = parse("x^2 - y^2", &r).unwrap();
        let d = parse("x - y", &r).unwrap();
        assert_eq!(a.div_exact(&d).unwrap(), parse("x + y", &r).unwrap());
        assert!(a.div_exact(&parse("x + 1", &r).unwrap()).is_none());
    }

    #[test]
    fn primitive_part_strips_content() {
        let r = ring2();
        let p = parse("4/3*x + 2/3*y", &r).unwrap();
        let pp = p.primitive_part();
        assert_eq!(pp, parse("2*x + y", &r).unwrap());
    }

    #[test]
    fn substitution() {
        let r = ring2();
        let p = parse("y^2 - x^3", &r).unwrap();
        let rt = Ring::new(vec!["t"]);
        let x = parse("t^2", &rt).unwrap();
        let y = parse("t^3", &rt).unwrap();
        assert!(p.substitute(&rt, &[x, y]).is_zero());
    }

    #[test]
    fn eval_at_point() {
        let r = ring2();
        let p = parse("x^2*y + 3/2", &r).unwrap();
        assert_eq!(p.eval(&[rat(2), rat(3)]), rat_f(27, 2));
    }

    fn rat_f(n: i64, d: i64) -> Rational {
        crate::poly::rat_frac(n, d)
    }
}
