//! CNF formulas and the exhaustive satisfiability oracle used to check the
//! hardness-instance generator.

use thiserror::Error;

/// CNF over variables `1..=var_count`; literals are nonzero integers with
/// sign for polarity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub var_count: usize,
    pub clauses: Vec<Vec<i32>>,
}

#[derive(Debug, Error)]
pub enum SatError {
    #[error("too many variables: {0} exceeds the exhaustive guard of {1}")]
    TooManyVariables(usize, usize),
}

impl CnfFormula {
    /// Rejects empty clauses, out-of-range literals, and duplicate literals
    /// within a clause.
    pub fn new(var_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self, String> {
        for (i, c) in clauses.iter().enumerate() {
            if c.is_empty() {
                return Err(format!("clause {} is empty", i + 1));
            }
            let mut seen = std::collections::BTreeSet::new();
            for &lit in c {
                if lit == 0 || lit.unsigned_abs() as usize > var_count {
                    return Err(format!("clause {}: literal {lit} out of range", i + 1));
                }
                if !seen.insert(lit) {
                    return Err(format!("clause {}: duplicate literal {lit}", i + 1));
                }
            }
        }
        Ok(CnfFormula { var_count, clauses })
    }

    /// Does `assignment` (bit v-1 = variable v) satisfy every clause?
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| clause_satisfied(c, assignment))
    }
}

fn clause_satisfied(clause: &[i32], assignment: u64) -> bool {
    clause.iter().any(|&lit| {
        let v = lit.unsigned_abs() as usize - 1;
        let val = assignment & (1 << v) != 0;
        (lit > 0) == val
    })
}

const SAT_GUARD: usize = 24;

/// Exhaustive satisfiability check, guarded at 24 variables.
pub fn sat_brute_force(f: &CnfFormula) -> Result<bool, SatError> {
    if f.var_count > SAT_GUARD {
        return Err(SatError::TooManyVariables(f.var_count, SAT_GUARD));
    }
    if f.clauses.is_empty() {
        return Ok(true);
    }
    Ok((0u64..(1 << f.var_count)).any(|a| f.satisfied_by(a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contradiction_is_unsat() {
        let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert!(!sat_brute_force(&f).unwrap());
    }

    #[test]
    fn empty_clause_set_is_sat() {
        let f = CnfFormula::new(3, vec![]).unwrap();
        assert!(sat_brute_force(&f).unwrap());
    }

    #[test]
    fn rejects_bad_clauses() {
        assert!(CnfFormula::new(2, vec![vec![]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![3]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![1, 1]]).is_err());
    }

    /// Independent check: unit-propagation DPLL.
    fn dpll(f: &CnfFormula, mut fixed: Vec<Option<bool>>) -> bool {
        loop {
            let mut unit = None;
            for c in &f.clauses {
                let mut unassigned = None;
                let mut satisfied = false;
                let mut count = 0;
                for &lit in c {
                    let v = lit.unsigned_abs() as usize - 1;
                    match fixed[v] {
                        Some(val) if (lit > 0) == val => satisfied = true,
                        Some(_) => {}
                        None => {
                            unassigned = Some(lit);
                            count += 1;
                        }
                    }
                }
                if satisfied {
                    continue;
                }
                match count {
                    0 => return false,
                    1 => unit = unassigned,
                    _ => {}
                }
                if unit.is_some() {
                    break;
                }
            }
            match unit {
                Some(lit) => fixed[lit.unsigned_abs() as usize - 1] = Some(lit > 0),
                None => break,
            }
        }
        match fixed.iter().position(|v| v.is_none()) {
            None => f.clauses.iter().all(|c| {
                c.iter().any(|&lit| fixed[lit.unsigned_abs() as usize - 1] == Some(lit > 0))
            }),
            Some(v) => {
                let mut t = fixed.clone();
                t[v] = Some(true);
                if dpll(f, t) {
                    return true;
                }
                fixed[v] = Some(false);
                dpll(f, fixed)
            }
        }
    }

    #[test]
    fn brute_force_matches_dpll_on_random_3cnf() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let vars = 4;
            let m = rng.gen_range(1..=10);
            let mut clauses = Vec::new();
            for _ in 0..m {
                let mut lits = Vec::new();
                while lits.len() < 3 {
                    let v = rng.gen_range(1..=vars) as i32;
                    let lit = if rng.gen_bool(0.5) { v } else { -v };
                    if !lits.contains(&lit) && !lits.contains(&-lit) {
                        lits.push(lit);
                    }
                }
                clauses.push(lits);
            }
            let f = CnfFormula::new(vars, clauses).unwrap();
            assert_eq!(sat_brute_force(&f).unwrap(), dpll(&f, vec![None; vars]));
        }
    }
}
