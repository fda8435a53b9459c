//! Canonical sparse polynomials over a field: sorted term lists, exact
//! evaluation, text parsing and formatting.
//!
//! Exponents are deliberately not reduced mod q-1; constructions are
//! emitted with the exact degrees of their defining formulas.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::FieldRef;

/// A polynomial as a strictly-descending list of (exponent, coefficient
/// encoding) pairs with no zero coefficients. The zero polynomial is the
/// empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    field: FieldRef,
    terms: Vec<(u64, u64)>,
}

impl SparsePoly {
    /// Canonicalizes raw terms: merges duplicate exponents by addition,
    /// drops zero coefficients, sorts exponents descending.
    pub fn new(field: FieldRef, raw: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut terms: Vec<(u64, u64)> = Vec::new();
        for (e, c) in raw {
            terms.push((e, c % field.q()));
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == e => last.1 = field.add(last.1, c),
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|&(_, c)| c != 0);
        SparsePoly { field, terms: merged }
    }

    pub fn zero(field: FieldRef) -> Self {
        SparsePoly { field, terms: Vec::new() }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn terms(&self) -> &[(u64, u64)] {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|&(e, _)| e)
    }

    /// Exact evaluation by square-and-multiply per term; 0^0 = 1, so the
    /// value at 0 is the constant coefficient.
    pub fn evaluate(&self, x: u64) -> u64 {
        let f = &self.field;
        let mut acc = 0;
        for &(e, c) in &self.terms {
            acc = f.add(acc, f.mul(c, f.pow(x, e)));
        }
        acc
    }

    /// Parses the "3x^7+6x" grammar: terms joined by '+',
    /// term = coeff '*'? 'x' ('^' exponent)? | coeff, whitespace ignored.
    /// Coefficients use the field's element text format.
    pub fn parse(field: FieldRef, text: &str) -> Result<Self> {
        let compact: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, ch)| !ch.is_whitespace())
            .collect();
        if compact.is_empty() {
            return Err(Error::SyntaxError(0));
        }
        let mut raw = Vec::new();
        let mut i = 0;
        loop {
            let start = i;
            // coefficient token: everything up to 'x', '*', '+', '^' or end
            let mut coeff_end = i;
            while coeff_end < compact.len() {
                let ch = compact[coeff_end].1;
                if ch == 'x' || ch == '*' || ch == '+' || ch == '^' {
                    break;
                }
                coeff_end += 1;
            }
            let coeff_text: String = compact[i..coeff_end].iter().map(|&(_, c)| c).collect();
            i = coeff_end;
            if i < compact.len() && compact[i].1 == '*' {
                i += 1;
            }
            let has_x = i < compact.len() && compact[i].1 == 'x';
            if has_x {
                i += 1;
            }
            let coeff = if coeff_text.is_empty() {
                if !has_x {
                    return Err(Error::SyntaxError(pos_at(&compact, start)));
                }
                1
            } else {
                field
                    .parse_element(&coeff_text)
                    .map_err(|_| Error::SyntaxError(pos_at(&compact, start)))?
            };
            let exp = if has_x {
                if i < compact.len() && compact[i].1 == '^' {
                    i += 1;
                    let d_start = i;
                    while i < compact.len() && compact[i].1.is_ascii_digit() {
                        i += 1;
                    }
                    if i == d_start {
                        return Err(Error::SyntaxError(pos_at(&compact, d_start)));
                    }
                    let digits: String = compact[d_start..i].iter().map(|&(_, c)| c).collect();
                    digits
                        .parse::<u64>()
                        .map_err(|_| Error::SyntaxError(pos_at(&compact, d_start)))?
                } else {
                    1
                }
            } else {
                0
            };
            raw.push((exp, coeff));
            if i == compact.len() {
                break;
            }
            if compact[i].1 != '+' {
                return Err(Error::SyntaxError(pos_at(&compact, i)));
            }
            i += 1;
            if i == compact.len() {
                return Err(Error::SyntaxError(pos_at(&compact, i - 1)));
            }
        }
        Ok(SparsePoly::new(field, raw))
    }

    pub fn format(&self) -> String {
        self.to_string()
    }
}

fn pos_at(compact: &[(usize, char)], i: usize) -> usize {
    compact
        .get(i)
        .or_else(|| compact.last())
        .map(|&(p, _)| p)
        .unwrap_or(0)
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let ext = self.field.k() > 1;
        for (idx, &(e, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(out, "+")?;
            }
            let coeff = self.field.format_element(c);
            match e {
                0 => write!(out, "{coeff}")?,
                _ => {
                    if c != 1 {
                        write!(out, "{coeff}{}", if ext { "*" } else { "" })?;
                    }
                    if e == 1 {
                        write!(out, "x")?;
                    } else {
                        write!(out, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// JSON form: {"terms": [[e, coeff_encoding], ...]} with exponents descending.
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Terms<'a>(&'a [(u64, u64)]);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = ser.serialize_seq(Some(self.0.len()))?;
                for &(e, c) in self.0 {
                    seq.serialize_element(&[e, c])?;
                }
                seq.end()
            }
        }
        let mut s = ser.serialize_struct("SparsePoly", 1)?;
        s.serialize_field("terms", &Terms(&self.terms))?;
        s.end()
    }
}
