//! Exact linear feasibility and optimization over the rationals by
//! Fourier–Motzkin elimination.
//!
//! Constraints are of the form `sum(coeffs[i] * x_i) + constant (>= | >) 0`.
//! Elimination preserves strictness: the combination of a strict bound with
//! any bound is strict. Because all data are rational, feasibility over the
//! reals, the rationals, and (for homogeneous systems) scaled integer points
//! coincide, which is what the monomial engine relies on.

use crate::rational::Rational;
use std::collections::BTreeSet;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub strict: bool,
}

impl LinearConstraint {
    pub fn at_least_zero(coeffs: Vec<Rational>, constant: Rational) -> Self {
        LinearConstraint {
            coeffs,
            constant,
            strict: false,
        }
    }

    pub fn greater_than_zero(coeffs: Vec<Rational>, constant: Rational) -> Self {
        LinearConstraint {
            coeffs,
            constant,
            strict: true,
        }
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// A constant constraint that can never hold.
    fn is_absurd(&self) -> bool {
        if !self.is_constant() {
            return false;
        }
        if self.strict {
            !self.constant.is_positive()
        } else {
            self.constant.is_negative()
        }
    }

    /// A constant constraint that always holds.
    fn is_trivial(&self) -> bool {
        self.is_constant() && !self.is_absurd()
    }

    /// Divides by the largest common positive scale so duplicates collapse.
    fn normalized(mut self) -> Self {
        let first = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .find(|c| !c.is_zero())
            .cloned();
        if let Some(lead) = first {
            let scale = lead.abs().recip();
            for c in &mut self.coeffs {
                *c = &*c * &scale;
            }
            self.constant = &self.constant * &scale;
        }
        self
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Feasibility {
    Feasible,
    Infeasible,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Supremum {
    Infeasible,
    Unbounded,
    /// Least upper bound of the variable over the feasible set.
    Value(Rational),
}

fn eliminate(constraints: BTreeSet<LinearConstraint>, var: usize) -> Option<BTreeSet<LinearConstraint>> {
    let mut lowers = Vec::new();
    let mut uppers = Vec::new();
    let mut rest = BTreeSet::new();
    for c in constraints {
        if c.is_absurd() {
            return None;
        }
        if c.is_trivial() {
            continue;
        }
        let a = c.coeffs.get(var).cloned().unwrap_or_else(Rational::zero);
        if a.is_zero() {
            rest.insert(c);
        } else if a.is_positive() {
            lowers.push(c);
        } else {
            uppers.push(c);
        }
    }
    for lo in &lowers {
        let a_lo = lo.coeffs[var].clone();
        for up in &uppers {
            let a_up = up.coeffs[var].clone();
            // a_lo > 0, a_up < 0; (-a_up)*lo + a_lo*up eliminates var.
            let s1 = -&a_up;
            let s2 = a_lo.clone();
            let n = lo.coeffs.len().max(up.coeffs.len());
            let mut coeffs = Vec::with_capacity(n);
            for i in 0..n {
                let x = lo.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                let y = up.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                coeffs.push(&(&s1 * &x) + &(&s2 * &y));
            }
            coeffs[var] = Rational::zero();
            let constant = &(&s1 * &lo.constant) + &(&s2 * &up.constant);
            let combined = LinearConstraint {
                coeffs,
                constant,
                strict: lo.strict || up.strict,
            }
            .normalized();
            if combined.is_absurd() {
                return None;
            }
            if !combined.is_trivial() {
                rest.insert(combined);
            }
        }
    }
    Some(rest)
}

pub fn feasible(num_vars: usize, constraints: &[LinearConstraint]) -> Feasibility {
    let mut set: BTreeSet<LinearConstraint> =
        constraints.iter().map(|c| c.clone().normalized()).collect();
    for var in 0..num_vars {
        match eliminate(set, var) {
            None => return Feasibility::Infeasible,
            Some(next) => set = next,
        }
    }
    for c in set {
        if c.is_absurd() {
            return Feasibility::Infeasible;
        }
    }
    Feasibility::Feasible
}

/// Least upper bound of variable `var` over the feasible region.
pub fn supremum_of_var(num_vars: usize, constraints: &[LinearConstraint], var: usize) -> Supremum {
    let mut set: BTreeSet<LinearConstraint> =
        constraints.iter().map(|c| c.clone().normalized()).collect();
    for v in 0..num_vars {
        if v == var {
            continue;
        }
        match eliminate(set, v) {
            None => return Supremum::Infeasible,
            Some(next) => set = next,
        }
    }
    let mut best: Option<Rational> = None;
    for c in set {
        if c.is_absurd() {
            return Supremum::Infeasible;
        }
        if c.is_trivial() {
            continue;
        }
        let a = c.coeffs.get(var).cloned().unwrap_or_else(Rational::zero);
        if a.is_negative() {
            // a*x + b >= 0  =>  x <= b / (-a)
            let bound = &c.constant / &(-&a);
            best = Some(match best {
                None => bound,
                Some(b) => Rational::min(b, bound),
            });
        }
    }
    match best {
        None => Supremum::Unbounded,
        Some(b) => {
            // The remaining single-variable system must itself be consistent.
            if feasible(num_vars, constraints) == Feasibility::Infeasible {
                Supremum::Infeasible
            } else {
                Supremum::Value(b)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn simple_feasible() {
        // x >= 0, y >= 0, x + y - 1 >= 0
        let cs = vec![
            LinearConstraint::at_least_zero(vec![q(1, 1), q(0, 1)], q(0, 1)),
            LinearConstraint::at_least_zero(vec![q(0, 1), q(1, 1)], q(0, 1)),
            LinearConstraint::at_least_zero(vec![q(1, 1), q(1, 1)], q(-1, 1)),
        ];
        assert_eq!(feasible(2, &cs), Feasibility::Feasible);
    }

    #[test]
    fn strict_cycle_infeasible() {
        // x > 0 and -x >= 0
        let cs = vec![
            LinearConstraint::greater_than_zero(vec![q(1, 1)], q(0, 1)),
            LinearConstraint::at_least_zero(vec![q(-1, 1)], q(0, 1)),
        ];
        assert_eq!(feasible(1, &cs), Feasibility::Infeasible);
    }

    #[test]
    fn strict_vs_weak_boundary() {
        // x > 1 and x <= 1 is infeasible; x >= 1 and x <= 1 is feasible.
        let strict = vec![
            LinearConstraint::greater_than_zero(vec![q(1, 1)], q(-1, 1)),
            LinearConstraint::at_least_zero(vec![q(-1, 1)], q(1, 1)),
        ];
        assert_eq!(feasible(1, &strict), Feasibility::Infeasible);
        let weak = vec![
            LinearConstraint::at_least_zero(vec![q(1, 1)], q(-1, 1)),
            LinearConstraint::at_least_zero(vec![q(-1, 1)], q(1, 1)),
        ];
        assert_eq!(feasible(1, &weak), Feasibility::Feasible);
    }

    #[test]
    fn supremum_simple() {
        // 0 <= x, x <= 3/2, and t <= x: sup t = 3/2
        let cs = vec![
            LinearConstraint::at_least_zero(vec![q(1, 1), q(0, 1)], q(0, 1)),
            LinearConstraint::at_least_zero(vec![q(-1, 1), q(0, 1)], q(3, 2)),
            LinearConstraint::at_least_zero(vec![q(1, 1), q(-1, 1)], q(0, 1)),
        ];
        assert_eq!(supremum_of_var(2, &cs, 1), Supremum::Value(q(3, 2)));
    }

    #[test]
    fn supremum_unbounded() {
        let cs = vec![LinearConstraint::at_least_zero(vec![q(1, 1)], q(0, 1))];
        assert_eq!(supremum_of_var(1, &cs, 0), Supremum::Unbounded);
    }

    #[test]
    fn supremum_infeasible() {
        let cs = vec![
            LinearConstraint::at_least_zero(vec![q(1, 1)], q(-2, 1)),
            LinearConstraint::at_least_zero(vec![q(-1, 1)], q(1, 1)),
        ];
        assert_eq!(supremum_of_var(1, &cs, 0), Supremum::Infeasible);
    }
}
