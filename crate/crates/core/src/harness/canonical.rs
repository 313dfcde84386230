use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{MultiGraph, Vertex};
use crate::invariants::{edge_connectivity, girth, maximum_matching, Extended};
use crate::iso::are_isomorphic;
use crate::limits::Limits;
use crate::named::{p14, p16, petersen};
use crate::oracle::{is_reduced, is_supereulerian, next_combination, reach};
use crate::reduction::f_value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyCheck {
    pub property: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
}

/// Outcome of the property suite for a reconstructed named graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalValidation {
    pub name: String,
    pub checks: Vec<PropertyCheck>,
    /// A connected vertex set whose contraction gives the Petersen graph.
    pub petersen_contraction: Option<Vec<Vertex>>,
    pub passed: bool,
}

impl CanonicalValidation {
    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.property.as_str())
            .collect()
    }
}

/// First connected vertex set (lexicographic among sets of the right size)
/// whose contraction is isomorphic to the Petersen graph.
pub fn find_petersen_contraction(g: &MultiGraph, limits: &Limits) -> Result<Option<Vec<Vertex>>> {
    let n = g.order();
    if n < 10 {
        return Ok(None);
    }
    if n > 64 {
        return Err(Error::limit("contraction search order", n as u64, 64));
    }
    let k = n - 9;
    let p = petersen();
    let masks = g.neighbor_masks();
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        let set: u64 = combo.iter().fold(0, |m, &v| m | 1 << v);
        let inner: Vec<u64> = masks.iter().map(|m| m & set).collect();
        if reach(&inner, 1 << combo[0]) == set {
            let verts: Vec<Vertex> = combo.iter().map(|&v| v as Vertex).collect();
            let (h, _) = g.contract_induced(&verts)?;
            if h.is_simple() && are_isomorphic(&h, &p, limits)?.is_some() {
                return Ok(Some(verts));
            }
        }
        if !next_combination(&mut combo, n) {
            return Ok(None);
        }
    }
}

fn check(property: &str, expected: impl ToString, observed: impl ToString) -> PropertyCheck {
    let (expected, observed) = (expected.to_string(), observed.to_string());
    PropertyCheck {
        property: property.to_string(),
        passed: expected == observed,
        expected,
        observed,
    }
}

/// Runs the property suite on `p14` or `p16`: order, size, 3-regularity,
/// edge connectivity 3, reducedness, not supereulerian, the value of
/// `2n - m - 2`, a perfect matching, girth 4 for `p14`, and a contraction
/// onto the Petersen graph.
pub fn validate_canonical(name: &str, limits: &Limits) -> Result<CanonicalValidation> {
    let (g, n) = match name {
        "p14" => (p14(), 14usize),
        "p16" => (p16(), 16usize),
        other => {
            return Err(Error::UnknownName(format!("{other} (expected p14 or p16)")));
        }
    };
    let mut checks = vec![
        check("order", n, g.order()),
        check("size", 3 * n / 2, g.size()),
        check("3-regular", true, g.degrees().iter().all(|&d| d == 3)),
        check("edge connectivity", Extended::Finite(3), edge_connectivity(&g)),
        check("reduced", true, is_reduced(&g, limits)?.answer),
        check("supereulerian", false, is_supereulerian(&g, limits)?.answer),
        check("2n - m - 2", n as i64 / 2 - 2, f_value(&g)?),
        check("matching number", n / 2, maximum_matching(&g).len()),
    ];
    if name == "p14" {
        checks.push(check("girth", Extended::Finite(4), girth(&g)));
    }
    let contraction = find_petersen_contraction(&g, limits)?;
    checks.push(check("contracts to Petersen", true, contraction.is_some()));
    Ok(CanonicalValidation {
        name: name.to_string(),
        passed: checks.iter().all(|c| c.passed),
        checks,
        petersen_contraction: contraction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p14_suite() {
        let v = validate_canonical("p14", &Limits::default()).unwrap();
        assert!(v.passed, "{:?}", v.failed());
        assert_eq!(v.petersen_contraction.as_ref().map(Vec::len), Some(5));
    }

    #[test]
    fn p16_suite() {
        let v = validate_canonical("p16", &Limits::default()).unwrap();
        assert!(v.passed, "{:?}", v.failed());
        assert_eq!(v.petersen_contraction.as_ref().map(Vec::len), Some(7));
    }

    #[test]
    fn unknown_name() {
        assert!(validate_canonical("p15", &Limits::default()).is_err());
    }

    #[test]
    fn petersen_contracts_by_a_single_vertex() {
        assert_eq!(
            find_petersen_contraction(&petersen(), &Limits::default()).unwrap(),
            Some(vec![0])
        );
    }
}
