use std::cmp::Ordering;

/// Exponent vector of fixed length (one entry per ambient variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// The order kinds used by the engine. `Lex` and `DegRevLex` are global
/// well-orders; `LocalDegRevLex` is the local order (1 is largest) used for
/// standard bases at the origin. `ElimBlock` compares a leading block of
/// variables degrevlex-first and is used for elimination and for Groebner
/// bases over rational-function coefficient fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    LocalDegRevLex,
    ElimBlock { cut: usize },
}

/// A monomial order: a kind plus a variable permutation. `perm[0]` is the
/// most significant variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: (0..nvars).collect() }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, perm: (0..nvars).collect() }
    }

    pub fn local_degrevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::LocalDegRevLex, perm: (0..nvars).collect() }
    }

    /// Elimination order: the variables in `eliminate` dominate everything
    /// else; within each block, degrevlex.
    pub fn elim_block(nvars: usize, eliminate: &[usize]) -> Self {
        let mut perm: Vec<usize> = eliminate.to_vec();
        for v in 0..nvars {
            if !eliminate.contains(&v) {
                perm.push(v);
            }
        }
        MonomialOrder { kind: OrderKind::ElimBlock { cut: eliminate.len() }, perm }
    }

    pub fn is_global(&self) -> bool {
        !matches!(self.kind, OrderKind::LocalDegRevLex)
    }

    /// `Greater` means `a` comes before `b` (a is the larger monomial).
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.cmp_lex(a, b, &self.perm),
            OrderKind::DegRevLex => self.cmp_drl(a, b, &self.perm),
            OrderKind::LocalDegRevLex => {
                let da: u32 = a.degree();
                let db: u32 = b.degree();
                match db.cmp(&da) {
                    Ordering::Equal => Self::revlex_tiebreak(a, b, &self.perm),
                    o => o,
                }
            }
            OrderKind::ElimBlock { cut } => {
                let (head, tail) = self.perm.split_at(cut);
                match self.cmp_drl(a, b, head) {
                    Ordering::Equal => self.cmp_drl(a, b, tail),
                    o => o,
                }
            }
        }
    }

    fn cmp_lex(&self, a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
        for &v in vars {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    fn cmp_drl(&self, a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
        let da: u32 = vars.iter().map(|&v| a.0[v]).sum();
        let db: u32 = vars.iter().map(|&v| b.0[v]).sum();
        match da.cmp(&db) {
            Ordering::Equal => Self::revlex_tiebreak(a, b, vars),
            o => o,
        }
    }

    fn revlex_tiebreak(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
        for &v in vars.iter().rev() {
            match a.0[v].cmp(&b.0[v]) {
                Ordering::Equal => continue,
                // smaller exponent in the least significant position wins
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::degrevlex(2);
        // x > y
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        // x^2 > xy > y^2
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // 1 is smallest
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn local_order_reverses_degree() {
        let o = MonomialOrder::local_degrevlex(2);
        // 1 is largest
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        // x > x^2, and within a degree same tiebreak as degrevlex
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[2, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn elim_block_dominates() {
        // eliminate variable 0: any power of it beats anything in the tail block
        let o = MonomialOrder::elim_block(2, &[0]);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_with_permutation() {
        // y > x
        let o = MonomialOrder { kind: OrderKind::Lex, perm: vec![1, 0] };
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[0, 1])), Ordering::Less);
    }
}
