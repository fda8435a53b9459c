//! Enumeration and counting of whole construction families for a field,
//! including reproduction of the published count tables.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::analyze::verify_construction;
use crate::construct::{
    construct_bin, construct_cyclotomic, construct_geom_sum, construct_tri, predicted_cycle_type,
    Construction, Family,
};
use crate::error::{Error, Result};
use crate::field::{factorize, FieldRef};

/// Euler totient via factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// All (m, d) with m*d = q-1 and r | d, ascending in m.
pub fn factor_pairs(field: &FieldRef, r: u64) -> Vec<(u64, u64)> {
    let n = field.q() - 1;
    divisors(n)
        .into_iter()
        .filter(|&m| (n / m) % r == 0)
        .map(|m| (m, n / m))
        .collect()
}

/// Which unit pool a family enumeration draws from: elements of order
/// exactly m, or the whole subgroup H_0 minus degenerate tuples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pool {
    EqualOrder,
    Mixed,
}

fn tuple_arity(family: Family) -> u64 {
    match family {
        Family::Bin | Family::GeomSum => 2,
        Family::Tri => 3,
        Family::Cyclo { r } => r,
    }
}

fn build(field: &FieldRef, family: Family, m: u64, units: &[u64]) -> Result<Construction> {
    match family {
        Family::Bin => construct_bin(field, m, units[0], units[1]),
        Family::Tri => construct_tri(field, m, units[0], units[1], units[2]),
        Family::Cyclo { r } => construct_cyclotomic(field, r, m, units),
        Family::GeomSum => construct_geom_sum(field, m, units[0], units[1]),
    }
}

/// Validates the family's divisibility constraint for (m, d) up front.
fn check_family_divisibility(field: &FieldRef, family: Family, m: u64) -> Result<u64> {
    let n = field.q() - 1;
    if m == 0 || n % m != 0 {
        return Err(Error::BadDivisibility(format!("m = {m} does not divide q-1")));
    }
    let d = n / m;
    match family {
        Family::Bin => {
            if d % 2 != 0 {
                return Err(Error::BadDivisibility(format!("d = {d} is odd")));
            }
        }
        Family::Tri => {
            if d % 3 != 0 {
                return Err(Error::BadDivisibility(format!("d = {d} is not a multiple of 3")));
            }
        }
        Family::Cyclo { r } => {
            if r < 2 || d % r != 0 {
                return Err(Error::BadDivisibility(format!("r does not divide d = {d}")));
            }
        }
        Family::GeomSum => {}
    }
    Ok(d)
}

/// Enumerates every construction of a family in lexicographic order of
/// the unit tuple encodings. The equal-order pool draws units of order
/// exactly m (what the published tables count); the mixed pool draws
/// from all of H_0, excluding all-equal tuples.
pub fn enumerate_family(
    field: &FieldRef,
    family: Family,
    m: u64,
    pool: Pool,
) -> Result<Vec<Construction>> {
    check_family_divisibility(field, family, m)?;
    let units = match (pool, family) {
        // geometric sums need order exactly m regardless of pool
        (_, Family::GeomSum) | (Pool::EqualOrder, _) => field.elements_of_order(m),
        (Pool::Mixed, _) => field.subgroup(m)?,
    };
    let arity = tuple_arity(family) as usize;
    let mut out = Vec::new();
    if units.is_empty() {
        return Ok(out);
    }
    let mut tuple = vec![0usize; arity];
    loop {
        let chosen: Vec<u64> = tuple.iter().map(|&i| units[i]).collect();
        if !chosen.iter().all(|&x| x == chosen[0]) {
            out.push(build(field, family, m, &chosen)?);
        }
        // lexicographic odometer over unit indices
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < units.len() {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// Closed-form family size for the given pool: with a pool of h units and
/// arity r, the number of not-all-equal tuples h^r - h. For equal-order
/// pools h = phi(m).
pub fn closed_form_count(field: &FieldRef, family: Family, m: u64, pool: Pool) -> u64 {
    let h = match (pool, family) {
        (_, Family::GeomSum) | (Pool::EqualOrder, _) => field.elements_of_order(m).len() as u64,
        (Pool::Mixed, _) => m,
    };
    let r = tuple_arity(family);
    h.pow(r as u32).saturating_sub(h)
}

/// Returns (closed_form, exhaustive) counts and lets callers check they
/// agree.
pub fn count_family(
    field: &FieldRef,
    family: Family,
    m: u64,
    pool: Pool,
) -> Result<(u64, u64)> {
    let closed = closed_form_count(field, family, m, pool);
    let exhaustive = enumerate_family(field, family, m, pool)?.len() as u64;
    Ok((closed, exhaustive))
}

/// One row of the per-field family table.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyRow {
    pub family: String,
    pub m: u64,
    pub d: u64,
    pub cycle_type: String,
    pub count: u64,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct: Option<u64>,
}

/// Number of distinct canonical polynomials among the constructions.
pub fn distinct_polynomials(cons: &[Construction]) -> u64 {
    let set: HashSet<&[(u64, u64)]> = cons.iter().map(|c| c.poly().terms()).collect();
    set.len() as u64
}

/// Verifies every member of a family against the exhaustive oracle, in
/// parallel; results folded in stream order.
pub fn verify_all(cons: &[Construction]) -> Result<()> {
    cons.par_iter()
        .map(|c| verify_construction(c, false))
        .collect::<Result<Vec<_>>>()?;
    Ok(())
}

/// Options for [`reproduce_table`].
#[derive(Debug, Clone, Copy, Default)]
pub struct TableOptions {
    /// Oracle-verify every member of every row.
    pub verify: bool,
    /// Additionally count distinct canonical polynomials per row.
    pub distinct: bool,
}

/// Builds the per-field table of equal-order binomial and trinomial
/// families: a binomial row for every (m, d) with d even and phi(m) >= 2,
/// a trinomial row for every (m, d) with 3 | d and phi(m) >= 3 (the
/// trinomial theorem's hypothesis, and what the published table lists);
/// rows with count 0 are suppressed.
pub fn reproduce_table(field: &FieldRef, opts: TableOptions) -> Result<Vec<FamilyRow>> {
    let mut rows = Vec::new();
    let push_rows = |family: Family, min_phi: u64, rows: &mut Vec<FamilyRow>| -> Result<()> {
        let r = tuple_arity(family);
        for (m, d) in factor_pairs(field, r) {
            if euler_phi(m) < min_phi {
                continue;
            }
            let cons = enumerate_family(field, family, m, Pool::EqualOrder)?;
            let count = cons.len() as u64;
            if count == 0 {
                continue;
            }
            let closed = closed_form_count(field, family, m, Pool::EqualOrder);
            if closed != count {
                return Err(Error::VerificationFailed(format!(
                    "closed-form count {closed} != exhaustive {count} for {} m = {m}",
                    family.tag()
                )));
            }
            let verified = if opts.verify {
                verify_all(&cons)?;
                true
            } else {
                false
            };
            let cycle_type = predicted_cycle_type(field.q(), d, r, &vec![m; r as usize], m)?;
            rows.push(FamilyRow {
                family: family.tag().to_string(),
                m,
                d,
                cycle_type: cycle_type.to_string(),
                count,
                verified,
                distinct: opts.distinct.then(|| distinct_polynomials(&cons)),
            });
        }
        Ok(())
    };
    push_rows(Family::Bin, 2, &mut rows)?;
    push_rows(Family::Tri, 3, &mut rows)?;
    Ok(rows)
}
