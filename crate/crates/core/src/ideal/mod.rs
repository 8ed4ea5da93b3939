//! Groebner bases for global orders, Mora standard bases for the local order,
//! and the ideal operations every multiplicity computation reduces to.

mod basis;
mod ops;
mod staircase;

pub use basis::BasisResult;
pub use ops::{eliminate, intersect, quotient, radical_contains, saturate};
pub use staircase::{count_under_staircase, monomial_ideal_dim};

use crate::budget::Budget;
use crate::error::{GermDim, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use std::sync::Arc;

/// Finitely generated ideal in a fixed ambient ring. Equality is always
/// tested via normal forms, never by comparing generator lists.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
}

/// Dimension of the local quotient ring at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalDim {
    Finite(usize),
    Infinite,
}

impl LocalDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            LocalDim::Finite(n) => Some(n),
            LocalDim::Infinite => None,
        }
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                assert_eq!(g.ring(), ring, "ambient ring mismatch");
                g.primitive_part()
            })
            .collect();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), gens: vec![] }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn plus(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring, "ambient ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus_polys(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Reduced Groebner basis for a global order.
    pub fn groebner(&self, order: &MonomialOrder, budget: &Budget) -> Result<BasisResult> {
        assert!(order.is_global(), "groebner requires a global order");
        basis::compute(self, order, budget)
    }

    /// Mora standard basis for the local degrevlex order.
    pub fn standard_basis_local(&self, budget: &Budget) -> Result<BasisResult> {
        let order = MonomialOrder::local_degrevlex(self.ring.nvars());
        basis::compute(self, &order, budget)
    }

    /// Membership test via normal form against a degrevlex Groebner basis.
    pub fn contains(&self, p: &Polynomial, budget: &Budget) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let gb = self.groebner(&MonomialOrder::degrevlex(self.ring.nvars()), budget)?;
        Ok(gb.normal_form(p, budget)?.is_zero())
    }

    /// Ideal equality via reduced Groebner bases (canonical for fixed order).
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        assert_eq!(self.ring, other.ring, "ambient ring mismatch");
        let order = MonomialOrder::degrevlex(self.ring.nvars());
        let a = self.groebner(&order, budget)?;
        let b = other.groebner(&order, budget)?;
        Ok(a.basis == b.basis)
    }

    pub fn is_unit_ideal(&self, budget: &Budget) -> Result<bool> {
        let order = MonomialOrder::degrevlex(self.ring.nvars());
        let gb = self.groebner(&order, budget)?;
        Ok(gb.basis.len() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero())
    }

    /// Number of monomials under the local staircase: the dimension of the
    /// local quotient ring at the origin.
    pub fn local_quotient_dim(&self, budget: &Budget) -> Result<LocalDim> {
        let sb = self.standard_basis_local(budget)?;
        let stair: Vec<Monomial> = sb.staircase.iter().cloned().collect();
        Ok(match count_under_staircase(&stair, self.ring.nvars()) {
            Some(n) => LocalDim::Finite(n),
            None => LocalDim::Infinite,
        })
    }

    /// Dimension of the germ at the origin (dimension of the tangent cone).
    pub fn local_germ_dim(&self, budget: &Budget) -> Result<GermDim> {
        let sb = self.standard_basis_local(budget)?;
        let stair: Vec<Monomial> = sb.staircase.iter().cloned().collect();
        if stair.iter().any(|m| m.is_one()) {
            return Ok(GermDim::Empty);
        }
        Ok(GermDim::Dim(monomial_ideal_dim(&stair, self.ring.nvars())))
    }

    /// Display generators canonically.
    pub fn display(&self) -> String {
        let order = MonomialOrder::degrevlex(self.ring.nvars());
        let gens: Vec<String> = self.gens.iter().map(|g| g.display(&order)).collect();
        format!("({})", gens.join(", "))
    }
}

/// True iff `h` lies in the prime `prime` (normal form reduces to zero).
pub fn vanishes_on_component(h: &Polynomial, prime: &Ideal, budget: &Budget) -> Result<bool> {
    prime.contains(h, budget)
}
