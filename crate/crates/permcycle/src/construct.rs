//! Constructions of permutation polynomials with prescribed cycle type:
//! binomials a*x^{(q+1)/2} + b*x, trinomials, the general r-term
//! cyclotomic form x*G(x^{(q-1)/r}), and the geometric-sum family,
//! together with their compositional inverses and predicted cycle types.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cycle::CycleType;
use crate::error::{Error, Result};
use crate::field::FieldRef;
use crate::poly::SparsePoly;

/// Construction family. The nominal term count is 2 for `Bin`, 3 for
/// `Tri`, r for `Cyclo` and d+1 for `GeomSum`; individual coefficients
/// may vanish without changing the family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Bin,
    Tri,
    Cyclo { r: u64 },
    GeomSum,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Bin => "bin",
            Family::Tri => "tri",
            Family::Cyclo { .. } => "cyclo",
            Family::GeomSum => "geomsum",
        }
    }
}

/// A constructed permutation polynomial with its provenance, predicted
/// cycle type and compositional inverse.
#[derive(Debug, Clone)]
pub struct Construction {
    pub(crate) field: FieldRef,
    pub(crate) family: Family,
    pub(crate) m: u64,
    pub(crate) d: u64,
    /// Number of coset classes distinguished (2 for Bin, 3 for Tri, r for
    /// Cyclo, d for GeomSum).
    pub(crate) r: u64,
    /// Units as supplied by the caller.
    pub(crate) units: Vec<u64>,
    pub(crate) unit_orders: Vec<u64>,
    pub(crate) poly: SparsePoly,
    pub(crate) inverse_poly: SparsePoly,
    pub(crate) predicted: CycleType,
}

impl Construction {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }
    pub fn family(&self) -> Family {
        self.family
    }
    pub fn m(&self) -> u64 {
        self.m
    }
    pub fn d(&self) -> u64 {
        self.d
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn units(&self) -> &[u64] {
        &self.units
    }
    pub fn unit_orders(&self) -> &[u64] {
        &self.unit_orders
    }
    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }
    pub fn inverse_poly(&self) -> &SparsePoly {
        &self.inverse_poly
    }
    pub fn predicted(&self) -> &CycleType {
        &self.predicted
    }
}

impl Serialize for Construction {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let f = &self.field;
        let mut s = ser.serialize_struct("Construction", 15)?;
        s.serialize_field("q", &f.q())?;
        s.serialize_field("p", &f.p())?;
        s.serialize_field("k", &f.k())?;
        s.serialize_field("modulus", &f.modulus())?;
        s.serialize_field("family", self.family.tag())?;
        s.serialize_field("r", &self.r)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("d", &self.d)?;
        s.serialize_field("units", &self.units)?;
        s.serialize_field("unit_orders", &self.unit_orders)?;
        s.serialize_field("poly", &self.poly)?;
        s.serialize_field("poly_text", &self.poly.to_string())?;
        s.serialize_field("inverse_poly", &self.inverse_poly)?;
        s.serialize_field("inverse_poly_text", &self.inverse_poly.to_string())?;
        s.serialize_field("predicted_cycle_type", &self.predicted.to_string())?;
        s.serialize_field("term_count", &self.poly.term_count())?;
        s.end()
    }
}

/// Inverse of a small integer n inside the field. Valid whenever p does
/// not divide n, which holds for every divisor of q-1.
fn small_inv(f: &FieldRef, n: u64) -> u64 {
    f.inv(n % f.p()).expect("n is coprime to p")
}

/// Cycle type of a construction that multiplies the d/r cosets of class i
/// by a unit of order `unit_orders[i]`: the fixed point 0 plus, for each
/// class, (d/r)*(m/m_i) cycles of length m_i.
pub fn predicted_cycle_type(
    q: u64,
    d: u64,
    r: u64,
    unit_orders: &[u64],
    m: u64,
) -> Result<CycleType> {
    if m == 0 || d == 0 || m * d != q - 1 {
        return Err(Error::BadDivisibility(format!("m*d = {} != q-1", m * d)));
    }
    if r == 0 || d % r != 0 {
        return Err(Error::BadDivisibility(format!("r = {r} does not divide d = {d}")));
    }
    if unit_orders.len() as u64 != r {
        return Err(Error::BadParameter(format!("expected {r} unit orders")));
    }
    let mut parts = vec![(1, 1)];
    for &mi in unit_orders {
        if mi == 0 || m % mi != 0 {
            return Err(Error::BadDivisibility(format!("order {mi} does not divide m = {m}")));
        }
        parts.push((mi, (d / r) * (m / mi)));
    }
    Ok(CycleType::from_parts(parts))
}

fn check_in_subgroup(f: &FieldRef, x: u64, m: u64) -> Result<()> {
    if x == 0 || f.pow(x, m) != 1 {
        return Err(Error::UnitOutsideSubgroup(x, m));
    }
    Ok(())
}

fn check_m(f: &FieldRef, m: u64) -> Result<u64> {
    if m == 0 || (f.q() - 1) % m != 0 {
        return Err(Error::BadDivisibility(format!("m = {m} does not divide q-1")));
    }
    Ok((f.q() - 1) / m)
}

fn bin_coeffs(f: &FieldRef, u: u64, v: u64) -> (u64, u64) {
    let half = small_inv(f, 2);
    (f.mul(f.sub(v, u), half), f.mul(f.add(u, v), half))
}

/// f(x) = a*x^{(q+1)/2} + b*x with a = (v-u)/2, b = (u+v)/2. Multiplies
/// the odd cosets by u and the even cosets by v; cycle type follows from
/// the unit orders. Units may have different orders.
pub fn construct_bin(f: &FieldRef, m: u64, u: u64, v: u64) -> Result<Construction> {
    let d = check_m(f, m)?;
    if d % 2 != 0 {
        return Err(Error::OddIndex(d));
    }
    if u == v {
        return Err(Error::EqualUnits);
    }
    check_in_subgroup(f, u, m)?;
    check_in_subgroup(f, v, m)?;
    let q = f.q();
    let (a, b) = bin_coeffs(f, u, v);
    let poly = SparsePoly::new(f.clone(), vec![((q + 1) / 2, a), (1, b)]);
    let (ui, vi) = (f.inv(u)?, f.inv(v)?);
    let (ai, bi) = bin_coeffs(f, ui, vi);
    let inverse_poly = SparsePoly::new(f.clone(), vec![((q + 1) / 2, ai), (1, bi)]);
    let ord_u = f.element_order(u)?;
    let ord_v = f.element_order(v)?;
    // class 0 (even cosets) is multiplied by v, class 1 (odd) by u
    let predicted = predicted_cycle_type(q, d, 2, &[ord_v, ord_u], m)?;
    Ok(Construction {
        field: f.clone(),
        family: Family::Bin,
        m,
        d,
        r: 2,
        units: vec![u, v],
        unit_orders: vec![ord_u, ord_v],
        poly,
        inverse_poly,
        predicted,
    })
}

fn tri_coeffs(f: &FieldRef, zeta: u64, u: u64, v: u64, w: u64) -> (u64, u64, u64) {
    let third = small_inv(f, 3);
    let z2 = f.mul(zeta, zeta);
    let a = f.mul(f.add(u, f.add(f.mul(v, zeta), f.mul(w, z2))), third);
    let b = f.mul(f.add(u, f.add(f.mul(v, z2), f.mul(w, zeta))), third);
    let c = f.mul(f.add(u, f.add(v, w)), third);
    (a, b, c)
}

/// f(x) = a*x^{(2q+1)/3} + b*x^{(q+2)/3} + c*x. Multiplies cosets of
/// class i mod 3 by u, v, w respectively.
pub fn construct_tri(f: &FieldRef, m: u64, u: u64, v: u64, w: u64) -> Result<Construction> {
    let q = f.q();
    if q % 3 != 1 {
        return Err(Error::BadResidue);
    }
    let d = check_m(f, m)?;
    if d % 3 != 0 {
        return Err(Error::IndexNotMultipleOf3(d));
    }
    if u == v && v == w {
        return Err(Error::AllUnitsEqual);
    }
    for &x in &[u, v, w] {
        check_in_subgroup(f, x, m)?;
    }
    let zeta = f.root_of_unity(3)?;
    let (a, b, c) = tri_coeffs(f, zeta, u, v, w);
    let poly = SparsePoly::new(
        f.clone(),
        vec![((2 * q + 1) / 3, a), ((q + 2) / 3, b), (1, c)],
    );
    let (ui, vi, wi) = (f.inv(u)?, f.inv(v)?, f.inv(w)?);
    let (ai, bi, ci) = tri_coeffs(f, zeta, ui, vi, wi);
    let inverse_poly = SparsePoly::new(
        f.clone(),
        vec![((2 * q + 1) / 3, ai), ((q + 2) / 3, bi), (1, ci)],
    );
    let orders = [
        f.element_order(u)?,
        f.element_order(v)?,
        f.element_order(w)?,
    ];
    let predicted = predicted_cycle_type(q, d, 3, &orders, m)?;
    Ok(Construction {
        field: f.clone(),
        family: Family::Tri,
        m,
        d,
        r: 3,
        units: vec![u, v, w],
        unit_orders: orders.to_vec(),
        poly,
        inverse_poly,
        predicted,
    })
}

/// Solves the r x r system G(zeta^i) = u_i for the coefficients of G,
/// returned highest degree first (a_{r-1}, ..., a_0). Uses the inverse-DFT
/// closed form a_s = (1/r) * sum_i u_i zeta^{-s*i} and checks the result
/// against the original system by substitution.
pub fn vandermonde_coeffs(f: &FieldRef, r: u64, units: &[u64]) -> Result<Vec<u64>> {
    if units.len() as u64 != r {
        return Err(Error::BadParameter(format!("expected {r} units")));
    }
    let zeta = f.root_of_unity(r)?;
    let zeta_inv = f.inv(zeta)?;
    let r_inv = small_inv(f, r);
    let mut desc = Vec::with_capacity(r as usize);
    for s in (0..r).rev() {
        let mut acc = 0;
        for (i, &ui) in units.iter().enumerate() {
            acc = f.add(acc, f.mul(ui, f.pow(zeta_inv, s * i as u64)));
        }
        desc.push(f.mul(acc, r_inv));
    }
    // substitute back: row i reads sum_s a_s * zeta^{i*s} = u_i
    for (i, &ui) in units.iter().enumerate() {
        let mut acc = 0;
        for s in 0..r {
            let a_s = desc[(r - 1 - s) as usize];
            acc = f.add(acc, f.mul(a_s, f.pow(zeta, i as u64 * s)));
        }
        assert_eq!(acc, ui, "Vandermonde solution failed substitute-back");
    }
    Ok(desc)
}

/// f(x) = x*G(x^l) with l = (q-1)/r, multiplying cosets of class i mod r
/// by u_i. Specializes to `construct_bin` at r = 2 and `construct_tri`
/// at r = 3 under the coset-role assignment of the units.
pub fn construct_cyclotomic(f: &FieldRef, r: u64, m: u64, units: &[u64]) -> Result<Construction> {
    if r < 2 {
        return Err(Error::BadParameter("r must be at least 2".into()));
    }
    if units.len() as u64 != r {
        return Err(Error::BadParameter(format!("expected {r} units")));
    }
    let d = check_m(f, m)?;
    if d % r != 0 {
        return Err(Error::BadDivisibility(format!("r = {r} does not divide d = {d}")));
    }
    if units.iter().all(|&x| x == units[0]) {
        return Err(Error::AllUnitsEqual);
    }
    for &x in units {
        check_in_subgroup(f, x, m)?;
    }
    let q = f.q();
    let ell = (q - 1) / r;
    let terms = |desc: &[u64]| {
        (0..r)
            .map(|s| (s * ell + 1, desc[(r - 1 - s) as usize]))
            .collect::<Vec<_>>()
    };
    let desc = vandermonde_coeffs(f, r, units)?;
    let poly = SparsePoly::new(f.clone(), terms(&desc));
    let inv_units: Vec<u64> = units.iter().map(|&x| f.inv(x).unwrap()).collect();
    let desc_inv = vandermonde_coeffs(f, r, &inv_units)?;
    let inverse_poly = SparsePoly::new(f.clone(), terms(&desc_inv));
    let orders: Vec<u64> = units
        .iter()
        .map(|&x| f.element_order(x))
        .collect::<Result<_>>()?;
    let predicted = predicted_cycle_type(q, d, r, &orders, m)?;
    Ok(Construction {
        field: f.clone(),
        family: Family::Cyclo { r },
        m,
        d,
        r,
        units: units.to_vec(),
        unit_orders: orders,
        poly,
        inverse_poly,
        predicted,
    })
}

fn geom_sum_poly(f: &FieldRef, m: u64, d: u64, u: u64, v: u64) -> SparsePoly {
    let a = f.mul(f.sub(u, v), small_inv(f, d));
    let mut raw: Vec<(u64, u64)> = (0..d).map(|i| (i * m + 1, a)).collect();
    raw.push((1, v));
    SparsePoly::new(f.clone(), raw)
}

/// f(x) = a * sum_{i=0}^{d-1} x^{i*m+1} + v*x with a = (u-v)/d.
/// Multiplies H_0 by u and every other nonzero element by v; cycle type
/// 1 + m^d. At d = 2 it formally equals the binomial with swapped roles.
pub fn construct_geom_sum(f: &FieldRef, m: u64, u: u64, v: u64) -> Result<Construction> {
    let d = check_m(f, m)?;
    if u == v {
        return Err(Error::EqualUnits);
    }
    if u == 0 {
        return Err(Error::UnitOutsideSubgroup(u, m));
    }
    if v == 0 {
        return Err(Error::UnitOutsideSubgroup(v, m));
    }
    let (ord_u, ord_v) = (f.element_order(u)?, f.element_order(v)?);
    if ord_u != ord_v {
        return Err(Error::OrderMismatch);
    }
    if ord_u != m {
        return Err(Error::UnitOutsideSubgroup(u, m));
    }
    let poly = geom_sum_poly(f, m, d, u, v);
    let inverse_poly = geom_sum_poly(f, m, d, f.inv(u)?, f.inv(v)?);
    let predicted = CycleType::from_parts(vec![(1, 1), (m, d)]);
    Ok(Construction {
        field: f.clone(),
        family: Family::GeomSum,
        m,
        d,
        r: d,
        units: vec![u, v],
        unit_orders: vec![m, m],
        poly,
        inverse_poly,
        predicted,
    })
}

/// The same construction on inverted units; its polynomial is the
/// compositional inverse of the original, and the map is an involution.
pub fn inverse_construction(c: &Construction) -> Construction {
    let f = &c.field;
    let inv: Vec<u64> = c.units.iter().map(|&x| f.inv(x).unwrap()).collect();
    let rebuilt = match c.family {
        Family::Bin => construct_bin(f, c.m, inv[0], inv[1]),
        Family::Tri => construct_tri(f, c.m, inv[0], inv[1], inv[2]),
        Family::Cyclo { r } => construct_cyclotomic(f, r, c.m, &inv),
        Family::GeomSum => construct_geom_sum(f, c.m, inv[0], inv[1]),
    };
    rebuilt.expect("inverted units satisfy the same preconditions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f13() -> FieldRef {
        Field::prime(13).unwrap()
    }

    #[test]
    fn predicted_types() {
        let t = predicted_cycle_type(13, 4, 2, &[3, 3], 3).unwrap();
        assert_eq!(t.to_string(), "1+3^4");
        let t = predicted_cycle_type(121, 2, 2, &[60, 60], 60).unwrap();
        assert_eq!(t.to_string(), "1+60^2");
        // all units trivial: the identity permutation
        let t = predicted_cycle_type(13, 4, 2, &[1, 1], 3).unwrap();
        assert_eq!(t.to_string(), "1^13");
        assert_eq!(t.total(), 13);
    }

    #[test]
    fn bin_f13() {
        let f = f13();
        let c = construct_bin(&f, 3, 3, 9).unwrap();
        assert_eq!(c.poly().to_string(), "3x^7+6x");
        assert_eq!(c.inverse_poly().to_string(), "10x^7+6x");
        assert_eq!(c.predicted().to_string(), "1+3^4");
        // Eq. (1): a+b = v, b-a = u
        let (a, b) = (c.poly().terms()[0].1, c.poly().terms()[1].1);
        assert_eq!(f.add(a, b), 9);
        assert_eq!(f.sub(b, a), 3);

        let c = construct_bin(&f, 3, 9, 3).unwrap();
        assert_eq!(c.poly().to_string(), "10x^7+6x");

        assert_eq!(construct_bin(&f, 3, 3, 3).unwrap_err(), Error::EqualUnits);
        assert_eq!(construct_bin(&f, 12, 2, 6).unwrap_err(), Error::OddIndex(1));
        assert_eq!(
            construct_bin(&f, 3, 5, 9).unwrap_err(),
            Error::UnitOutsideSubgroup(5, 3)
        );
    }

    #[test]
    fn tri_f13() {
        let f = f13();
        let c = construct_tri(&f, 4, 5, 8, 5).unwrap();
        assert_eq!(c.poly().to_string(), "3x^9+9x^5+6x");
        assert_eq!(c.predicted().to_string(), "1+4^3");
        assert_eq!(construct_tri(&f, 4, 5, 5, 5).unwrap_err(), Error::AllUnitsEqual);
        let f11 = Field::prime(11).unwrap();
        assert_eq!(
            construct_tri(&f11, 5, 3, 4, 5).unwrap_err(),
            Error::BadResidue
        );
    }

    #[test]
    fn vandermonde_specializations() {
        let f = f13();
        assert_eq!(vandermonde_coeffs(&f, 2, &[9, 3]).unwrap(), vec![3, 6]);
        assert_eq!(vandermonde_coeffs(&f, 3, &[5, 8, 5]).unwrap(), vec![3, 9, 6]);
        // constant right-hand side gives the constant solution
        assert_eq!(vandermonde_coeffs(&f, 4, &[7, 7, 7, 7]).unwrap(), vec![0, 0, 0, 7]);
    }

    #[test]
    fn cyclotomic_matches_bin_and_tri() {
        let f = f13();
        let c = construct_cyclotomic(&f, 2, 3, &[9, 3]).unwrap();
        let b = construct_bin(&f, 3, 3, 9).unwrap();
        assert_eq!(c.poly(), b.poly());
        assert_eq!(c.inverse_poly(), b.inverse_poly());
        assert_eq!(c.predicted(), b.predicted());

        let c = construct_cyclotomic(&f, 3, 4, &[5, 8, 5]).unwrap();
        let t = construct_tri(&f, 4, 5, 8, 5).unwrap();
        assert_eq!(c.poly(), t.poly());
        assert_eq!(c.predicted(), t.predicted());

        let c = construct_cyclotomic(&f, 4, 3, &[3, 9, 3, 9]).unwrap();
        assert_eq!(c.predicted().to_string(), "1+3^4");
    }

    #[test]
    fn geom_sum_f13() {
        let f = f13();
        let c = construct_geom_sum(&f, 3, 3, 9).unwrap();
        assert_eq!(c.poly().to_string(), "5x^10+5x^7+5x^4+x");
        assert_eq!(c.predicted().to_string(), "1+3^4");
        assert_eq!(c.poly().evaluate(1), 3);
        assert_eq!(c.poly().evaluate(2), 5);
        assert_eq!(construct_geom_sum(&f, 3, 3, 3).unwrap_err(), Error::EqualUnits);
        assert_eq!(
            construct_geom_sum(&f, 12, 2, 5).unwrap_err(),
            Error::OrderMismatch
        );
    }

    #[test]
    fn geom_sum_d2_equals_swapped_bin() {
        let f = f13();
        // m = 6, d = 2
        let pool = f.elements_of_order(6);
        for &u in &pool {
            for &v in &pool {
                if u == v {
                    continue;
                }
                let g = construct_geom_sum(&f, 6, u, v).unwrap();
                let b = construct_bin(&f, 6, v, u).unwrap();
                assert_eq!(g.poly(), b.poly());
            }
        }
    }

    #[test]
    fn inverse_is_involution() {
        let f = f13();
        let c = construct_bin(&f, 3, 3, 9).unwrap();
        let ci = inverse_construction(&c);
        assert_eq!(ci.poly(), c.inverse_poly());
        assert_eq!(ci.units(), &[9, 3]);
        let cii = inverse_construction(&ci);
        assert_eq!(cii.poly(), c.poly());
        assert_eq!(cii.units(), c.units());

        let t = construct_tri(&f, 4, 5, 8, 5).unwrap();
        let ti = inverse_construction(&t);
        assert_eq!(ti.units(), &[8, 5, 8]);
        assert_eq!(ti.poly(), t.inverse_poly());
    }
}
