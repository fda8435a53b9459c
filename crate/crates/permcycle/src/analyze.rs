//! Ground-truth oracle: exhaustive evaluation tables, bijection and
//! cycle-type extraction, composition checks, coset multipliers and the
//! multiplication-map cycle law.

use std::collections::HashMap;

use serde::Serialize;

use crate::construct::Construction;
use crate::cycle::CycleType;
use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::poly::SparsePoly;

/// Dense evaluation table indexed by encoding: image[e] = f(element e).
#[derive(Debug, Clone)]
pub struct PermTable {
    field: FieldRef,
    image: Vec<u64>,
}

impl PermTable {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn image(&self) -> &[u64] {
        &self.image
    }

    /// True iff the image is a bijection of [0, q-1].
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        for &y in &self.image {
            let y = y as usize;
            if y >= seen.len() || seen[y] {
                return false;
            }
            seen[y] = true;
        }
        true
    }

    /// Cycle type by visited-flag traversal.
    pub fn cycle_type(&self) -> Result<CycleType> {
        if !self.is_permutation() {
            return Err(Error::NotAPermutation);
        }
        let mut visited = vec![false; self.image.len()];
        let mut lengths = Vec::new();
        for start in 0..self.image.len() {
            if visited[start] {
                continue;
            }
            let mut len = 0u64;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                len += 1;
                cur = self.image[cur] as usize;
            }
            lengths.push(len);
        }
        Ok(CycleType::from_lengths(lengths))
    }

    pub fn fixed_points(&self) -> Vec<u64> {
        self.image
            .iter()
            .enumerate()
            .filter(|&(e, &y)| e as u64 == y)
            .map(|(e, _)| e as u64)
            .collect()
    }
}

/// Evaluates f on the whole field by walking powers of the generator, so
/// each entry costs one table lookup per term instead of a full
/// square-and-multiply.
pub fn eval_table(f: &SparsePoly) -> PermTable {
    let field = f.field().clone();
    let q = field.q();
    let n = q - 1;
    let powers = field.generator_powers();
    let mut image = vec![0u64; q as usize];
    // f(0) is the constant coefficient, if any
    image[0] = f
        .terms()
        .iter()
        .find(|&&(e, _)| e == 0)
        .map(|&(_, c)| c)
        .unwrap_or(0);
    for e in 0..n {
        let x = powers[e as usize];
        let mut acc = 0;
        for &(exp, c) in f.terms() {
            let idx = ((exp as u128 * e as u128) % n as u128) as usize;
            acc = field.add(acc, field.mul(c, powers[idx]));
        }
        image[x as usize] = acc;
    }
    PermTable { field, image }
}

/// True iff t1 and t2 compose to the identity in both orders.
pub fn compose_is_identity(t1: &PermTable, t2: &PermTable) -> Result<bool> {
    if t1.field != t2.field || t1.image.len() != t2.image.len() {
        return Err(Error::FieldMismatch);
    }
    Ok(t1
        .image
        .iter()
        .enumerate()
        .all(|(e, &y)| t2.image[y as usize] == e as u64)
        && t2
            .image
            .iter()
            .enumerate()
            .all(|(e, &y)| t1.image[y as usize] == e as u64))
}

/// For each coset H_i = g^i * H_0 (i in [0, d-1]) checks that f(x)/x is
/// constant on the coset and returns that constant.
pub fn coset_multipliers(f: &SparsePoly, d: u64) -> Result<Vec<u64>> {
    let field = f.field().clone();
    let n = field.q() - 1;
    if d == 0 || n % d != 0 {
        return Err(Error::BadDivisibility(format!("{d} does not divide q-1")));
    }
    let m = n / d;
    let powers = field.generator_powers();
    let value_at = |e: u64| {
        let mut acc = 0;
        for &(exp, c) in f.terms() {
            let idx = ((exp as u128 * e as u128) % n as u128) as usize;
            acc = field.add(acc, field.mul(c, powers[idx]));
        }
        acc
    };
    let mut out = Vec::with_capacity(d as usize);
    for i in 0..d {
        let mut mult = None;
        for j in 0..m {
            let e = i + d * j;
            // x^{-1} = g^{n-e}
            let x_inv = powers[((n - e) % n) as usize];
            let ratio = field.mul(value_at(e), x_inv);
            match mult {
                None => mult = Some(ratio),
                Some(prev) if prev == ratio => {}
                Some(_) => return Err(Error::NotCosetMultiplicative),
            }
        }
        out.push(mult.unwrap());
    }
    Ok(out)
}

/// Cycle type of x -> u*x on the subgroup of order M, by traversal.
/// By the multiplication-map law this equals m^{M/m} with m = ord(u).
pub fn multiplication_cycle_type(field: &FieldRef, u: u64, big_m: u64) -> Result<CycleType> {
    let n = field.q() - 1;
    if big_m == 0 || n % big_m != 0 {
        return Err(Error::BadDivisibility(format!("{big_m} does not divide q-1")));
    }
    if u == 0 || field.pow(u, big_m) != 1 {
        return Err(Error::UnitOutsideSubgroup(u, big_m));
    }
    let subgroup = field.subgroup(big_m)?;
    let index: HashMap<u64, usize> = subgroup
        .iter()
        .enumerate()
        .map(|(i, &x)| (x, i))
        .collect();
    let mut visited = vec![false; subgroup.len()];
    let mut lengths = Vec::new();
    for start in 0..subgroup.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        while !visited[cur] {
            visited[cur] = true;
            len += 1;
            cur = index[&field.mul(u, subgroup[cur])];
        }
        lengths.push(len);
    }
    Ok(CycleType::from_lengths(lengths))
}

/// Machine-readable verification report.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub is_permutation: bool,
    pub cycle_type: Option<String>,
    pub fixed_points: Vec<u64>,
    pub matches_predicted: Option<bool>,
}

/// Analyzes an arbitrary polynomial, optionally against a predicted type.
pub fn verify_poly(f: &SparsePoly, predicted: Option<&CycleType>) -> VerifyReport {
    let table = eval_table(f);
    let is_permutation = table.is_permutation();
    let cycle_type = is_permutation.then(|| table.cycle_type().unwrap());
    let matches_predicted =
        predicted.map(|p| is_permutation && cycle_type.as_ref() == Some(p));
    VerifyReport {
        is_permutation,
        cycle_type: cycle_type.map(|t| t.to_string()),
        fixed_points: table.fixed_points(),
        matches_predicted,
    }
}

/// Full oracle check of a construction: bijection, cycle type equal to
/// the prediction and, when `check_inverse` is set, pointwise inverse
/// composition in both orders.
pub fn verify_construction(c: &Construction, check_inverse: bool) -> Result<()> {
    let table = eval_table(c.poly());
    if !table.is_permutation() {
        return Err(Error::VerificationFailed(format!(
            "{} is not a permutation",
            c.poly()
        )));
    }
    let actual = table.cycle_type()?;
    if &actual != c.predicted() {
        return Err(Error::VerificationFailed(format!(
            "cycle type {actual} != predicted {}",
            c.predicted()
        )));
    }
    if check_inverse {
        let inverse = eval_table(c.inverse_poly());
        if !compose_is_identity(&table, &inverse)? {
            return Err(Error::VerificationFailed(format!(
                "{} does not invert {}",
                c.inverse_poly(),
                c.poly()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::SparsePoly;

    fn f13() -> FieldRef {
        Field::prime(13).unwrap()
    }

    fn poly(text: &str) -> SparsePoly {
        SparsePoly::parse(f13(), text).unwrap()
    }

    #[test]
    fn tables_and_bijectivity() {
        let id = eval_table(&poly("x"));
        assert!(id.is_permutation());
        assert_eq!(id.cycle_type().unwrap().to_string(), "1^13");
        assert_eq!(id.fixed_points().len(), 13);

        let t = eval_table(&poly("3x^7+6x"));
        assert_eq!(t.image()[0], 0);
        assert_eq!(t.image()[1], 9);
        assert!(t.is_permutation());
        assert_eq!(t.cycle_type().unwrap().to_string(), "1+3^4");
        assert_eq!(t.fixed_points(), vec![0]);

        let sq = eval_table(&poly("x^2"));
        assert!(!sq.is_permutation());
        assert_eq!(sq.cycle_type().unwrap_err(), Error::NotAPermutation);
    }

    #[test]
    fn doubling_map() {
        let t = eval_table(&poly("2x"));
        assert_eq!(t.cycle_type().unwrap().to_string(), "1+12");
        assert!(!compose_is_identity(&t, &t).unwrap());
    }

    #[test]
    fn shift_has_no_fixed_points() {
        let t = eval_table(&poly("x+1"));
        assert!(t.fixed_points().is_empty());
    }

    #[test]
    fn composition() {
        let t1 = eval_table(&poly("3x^7+6x"));
        let t2 = eval_table(&poly("10x^7+6x"));
        assert!(compose_is_identity(&t1, &t2).unwrap());
        let id = eval_table(&poly("x"));
        assert!(compose_is_identity(&id, &id).unwrap());
    }

    #[test]
    fn coset_multiplier_law() {
        let mults = coset_multipliers(&poly("3x^7+6x"), 4).unwrap();
        assert_eq!(mults, vec![9, 3, 9, 3]);

        let mults = coset_multipliers(&poly("5x^10+5x^7+5x^4+x"), 4).unwrap();
        assert_eq!(mults, vec![3, 9, 9, 9]);

        assert_eq!(
            coset_multipliers(&poly("x^2"), 2).unwrap_err(),
            Error::NotCosetMultiplicative
        );
    }

    #[test]
    fn multiplication_map_cycles() {
        let f = f13();
        let t = multiplication_cycle_type(&f, 3, 12).unwrap();
        assert_eq!(t.to_string(), "3^4");
        let t = multiplication_cycle_type(&f, 1, 12).unwrap();
        assert_eq!(t.to_string(), "1^12");
        let t = multiplication_cycle_type(&f, 5, 4).unwrap();
        assert_eq!(t.to_string(), "4");
        assert_eq!(
            multiplication_cycle_type(&f, 2, 4).unwrap_err(),
            Error::UnitOutsideSubgroup(2, 4)
        );
    }

    #[test]
    fn eval_table_matches_direct_evaluation() {
        let f9 = Field::extension(3, 2, None).unwrap();
        let p = SparsePoly::new(f9.clone(), vec![(5, 4), (1, 7)]);
        let t = eval_table(&p);
        for e in 0..9 {
            assert_eq!(t.image()[e as usize], p.evaluate(e));
        }
    }
}
