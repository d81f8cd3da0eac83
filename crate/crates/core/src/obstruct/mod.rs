//! Obstructions to generating-family-compatible Lagrangian cobordisms and
//! fillings, computed from [`LegendrianProfile`]s.
//!
//! A verdict of [`Verdict::Obstructed`] is a proof that no compatible
//! cobordism exists. [`Verdict::NotObstructed`] only means every check
//! passed.

mod sequences;

pub use sequences::{
    arnold_check, cobordism_les_check, cobordism_les_check_unknown_topology, duality_feasible, filling_relative_cohomology,
    genus_constraint, knot_betti, knot_cobordism_relative_cohomology, sphere_betti, ArnoldMargin, ArnoldReport,
};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::LegendrianProfile;
use crate::linalg::LaurentDims;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructError {
    #[error("the genus formula needs knots (n = 1), got n = {0}")]
    NotAKnot(u32),
    #[error("ends have different dimensions: n = {source_n} and n = {target_n}")]
    MixedDimension { source_n: u32, target_n: u32 },
    #[error("only connected cobordisms are supported")]
    Disconnected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Obstructed,
    NotObstructed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "obstructed",
            Verdict::NotObstructed => "not obstructed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cite: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, cite: &str, pass: bool, detail: String) -> Self {
        Check { name: name.into(), cite: cite.into(), pass, detail }
    }
}

/// Checks run in order; the report stops at the first check whose failure
/// leaves later ones without inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub verdict: Verdict,
    pub checks: Vec<Check>,
    /// Genera not ruled out.
    pub genus: Vec<u64>,
}

impl ObstructionReport {
    fn from_checks(checks: Vec<Check>, genus: Vec<u64>) -> Self {
        let obstructed = checks.iter().any(|c| !c.pass);
        ObstructionReport {
            verdict: if obstructed { Verdict::Obstructed } else { Verdict::NotObstructed },
            checks,
            genus: if obstructed { Vec::new() } else { genus },
        }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict: {}", self.verdict)?;
        for c in &self.checks {
            writeln!(f, "  [{}] {} ({})", if c.pass { "pass" } else { "FAIL" }, c.name, c.cite)?;
            writeln!(f, "         {}", c.detail)?;
        }
        if !self.genus.is_empty() {
            let g: Vec<String> = self.genus.iter().map(u64::to_string).collect();
            writeln!(f, "genus: {}", g.join(", "))?;
        }
        Ok(())
    }
}

/// A candidate cobordism from `source` (the negative end) to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobordismQuery {
    pub source: LegendrianProfile,
    pub target: LegendrianProfile,
    pub connected: bool,
}

impl CobordismQuery {
    pub fn new(source: LegendrianProfile, target: LegendrianProfile) -> Self {
        CobordismQuery { source, target, connected: true }
    }
}

const CITE_GF: &str = "augmentation existence certifies a generating family";
const CITE_TB: &str = "Thurston-Bennequin difference equals relative Euler characteristic";
const CITE_CONCORDANCE: &str = "concordance isomorphism";
const CITE_LES: &str = "cobordism long exact sequence";
const CITE_FILLING: &str = "filling isomorphism with relative cohomology";

fn set_string(polys: &[LaurentDims]) -> String {
    let parts: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn pair_string(pairs: &[(LaurentDims, LaurentDims)]) -> String {
    let parts: Vec<String> = pairs.iter().map(|(p, q)| format!("{p} -> {q}")).collect();
    parts.join("; ")
}

fn gf_check(profiles: &[(&str, &LegendrianProfile)]) -> Check {
    let pass = profiles.iter().all(|(_, p)| p.has_generating_family());
    let detail: Vec<String> = profiles.iter().map(|(name, p)| format!("{name}: {} polynomial(s)", p.polys.len())).collect();
    Check::new("generating families", CITE_GF, pass, detail.join(", "))
}

/// Polynomial pairs `(p₋, p₊)` passing the cobordism exact sequence. For
/// knots `genus` fixes the topology; otherwise it is left open.
pub fn compatible_pairs(
    source: &LegendrianProfile,
    target: &LegendrianProfile,
    genus: Option<u64>,
) -> Vec<(LaurentDims, LaurentDims)> {
    let mut out = Vec::new();
    for p in &source.polys {
        for q in &target.polys {
            let ok = match genus {
                Some(g) => cobordism_les_check(p, q, &knot_cobordism_relative_cohomology(g)).is_some(),
                None => cobordism_les_check_unknown_topology(p, q, source.n),
            };
            if ok {
                out.push((p.clone(), q.clone()));
            }
        }
    }
    out
}

/// Runs the cobordism checks: generating families on both ends, the genus
/// forced by Thurston–Bennequin invariants (knots only), the concordance
/// isomorphism when that genus is 0, and the long exact sequence.
pub fn obstruct_cobordism(q: &CobordismQuery) -> Result<ObstructionReport, ObstructError> {
    let (src, tgt) = (&q.source, &q.target);
    if src.n != tgt.n {
        return Err(ObstructError::MixedDimension { source_n: src.n, target_n: tgt.n });
    }
    if !q.connected {
        return Err(ObstructError::Disconnected);
    }
    let mut checks = vec![gf_check(&[("source", src), ("target", tgt)])];
    if !checks[0].pass {
        return Ok(ObstructionReport::from_checks(checks, Vec::new()));
    }

    let genus = if src.n == 1 {
        let g = genus_constraint(src.tb, tgt.tb, 1)?;
        let detail = match g {
            Some(0) => format!("tb {} -> {}: genus 0, so a concordance", src.tb, tgt.tb),
            Some(g) => format!("tb {} -> {}: genus {g}", src.tb, tgt.tb),
            None => format!("tb {} -> {}: difference is not a nonnegative even number", src.tb, tgt.tb),
        };
        checks.push(Check::new("genus from Thurston-Bennequin invariants", CITE_TB, g.is_some(), detail));
        match g {
            Some(g) => Some(g),
            None => return Ok(ObstructionReport::from_checks(checks, Vec::new())),
        }
    } else {
        None
    };

    if genus == Some(0) {
        let common: Vec<LaurentDims> = src.polys.iter().filter(|p| tgt.polys.contains(p)).cloned().collect();
        let detail = if common.is_empty() {
            format!("polynomial sets {} and {} are disjoint", set_string(&src.polys), set_string(&tgt.polys))
        } else {
            format!("shared polynomials {}", set_string(&common))
        };
        checks.push(Check::new("concordance isomorphism", CITE_CONCORDANCE, !common.is_empty(), detail));
    }

    let pairs = compatible_pairs(src, tgt, genus);
    let topology = match genus {
        Some(g) => format!("H^*(L, target) = {}", knot_cobordism_relative_cohomology(g)),
        None => format!("H^k(L, target) unknown for 1 <= k <= {}", src.n),
    };
    let detail = if pairs.is_empty() {
        format!("{topology}; no polynomial pair fits an exact sequence")
    } else {
        format!("{topology}; compatible pairs: {}", pair_string(&pairs))
    };
    checks.push(Check::new("cobordism exact sequence", CITE_LES, !pairs.is_empty(), detail));
    Ok(ObstructionReport::from_checks(checks, genus.into_iter().collect()))
}

/// Filling checks. For knots a filling of genus `g` forces some polynomial
/// to be `2g + t` and `tb = 2g − 1`; in general a class of negative degree
/// in every polynomial rules out a filling.
pub fn obstruct_filling(p: &LegendrianProfile) -> ObstructionReport {
    let mut checks = vec![gf_check(&[("profile", p)])];
    if !checks[0].pass {
        return ObstructionReport::from_checks(checks, Vec::new());
    }
    if p.n == 1 {
        let forced = (p.tb + 1 >= 0 && (p.tb + 1) % 2 == 0).then(|| ((p.tb + 1) / 2) as u64);
        let admissible: Vec<(LaurentDims, u64)> = forced
            .into_iter()
            .filter_map(|g| {
                let expected = filling_relative_cohomology(g).regrade(1, -1);
                p.polys.contains(&expected).then_some((expected, g))
            })
            .collect();
        let detail = match (forced, admissible.first()) {
            (None, _) => format!("tb = {} is not 2g - 1 for any genus g >= 0", p.tb),
            (Some(g), None) => format!(
                "tb = {} forces genus {g}, but {} is not in {}",
                p.tb,
                filling_relative_cohomology(g).regrade(1, -1),
                set_string(&p.polys)
            ),
            (Some(_), Some((poly, g))) => format!("{poly} matches a genus {g} filling"),
        };
        let genus = admissible.iter().map(|(_, g)| *g).collect();
        checks.push(Check::new("filling isomorphism", CITE_FILLING, !admissible.is_empty(), detail));
        ObstructionReport::from_checks(checks, genus)
    } else {
        let ok: Vec<LaurentDims> = p.polys.iter().filter(|q| q.min_degree().is_none_or(|k| k >= 0)).cloned().collect();
        let detail = if ok.is_empty() {
            format!("every polynomial in {} has a class of negative degree", set_string(&p.polys))
        } else {
            format!("no negative degree classes in {}", set_string(&ok))
        };
        checks.push(Check::new("filling isomorphism", CITE_FILLING, !ok.is_empty(), detail));
        ObstructionReport::from_checks(checks, Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{flying_saucer, twisted_dumbbell};

    fn knot(tb: i64, polys: &[&[(i32, usize)]]) -> LegendrianProfile {
        let polys = polys.iter().map(|p| LaurentDims::from_pairs(p.iter().copied())).collect();
        LegendrianProfile::manual(1, tb, 0, polys, LaurentDims::monomial(1, 1)).unwrap()
    }

    #[test]
    fn concordance_between_different_sets_is_obstructed() {
        let a = knot(1, &[&[(0, 2), (1, 1)]]);
        let b = knot(1, &[&[(-1, 1), (1, 1), (2, 1)]]);
        let r = obstruct_cobordism(&CobordismQuery::new(a.clone(), b)).unwrap();
        assert!(r.is_obstructed());
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            ["generating families", "genus from Thurston-Bennequin invariants", "concordance isomorphism", "cobordism exact sequence"]
        );
        assert!(r.genus.is_empty());
        let same = obstruct_cobordism(&CobordismQuery::new(a.clone(), a)).unwrap();
        assert_eq!(same.verdict, Verdict::NotObstructed);
        assert_eq!(same.genus, vec![0]);
    }

    #[test]
    fn tb_decrease_is_obstructed() {
        let a = knot(1, &[&[(0, 2), (1, 1)]]);
        let u = knot(-1, &[&[(1, 1)]]);
        assert!(obstruct_cobordism(&CobordismQuery::new(a.clone(), u.clone())).unwrap().is_obstructed());
        let up = obstruct_cobordism(&CobordismQuery::new(u, a)).unwrap();
        assert_eq!(up.verdict, Verdict::NotObstructed);
        assert_eq!(up.genus, vec![1]);
    }

    #[test]
    fn missing_generating_family() {
        let a = knot(1, &[]);
        let r = obstruct_cobordism(&CobordismQuery::new(a.clone(), a.clone())).unwrap();
        assert!(r.is_obstructed());
        assert_eq!(r.checks.len(), 1);
        assert!(obstruct_filling(&a).is_obstructed());
    }

    #[test]
    fn query_errors() {
        let a = knot(1, &[&[(0, 2), (1, 1)]]);
        assert!(matches!(
            obstruct_cobordism(&CobordismQuery::new(a.clone(), flying_saucer())),
            Err(ObstructError::MixedDimension { .. })
        ));
        let q = CobordismQuery { connected: false, ..CobordismQuery::new(a.clone(), a) };
        assert_eq!(obstruct_cobordism(&q), Err(ObstructError::Disconnected));
    }

    #[test]
    fn fillings() {
        let r = obstruct_filling(&knot(1, &[&[(0, 2), (1, 1)]]));
        assert_eq!((r.verdict, r.genus.clone()), (Verdict::NotObstructed, vec![1]));
        assert_eq!(obstruct_filling(&knot(-1, &[&[(1, 1)]])).genus, vec![0]);
        assert!(obstruct_filling(&knot(1, &[&[(-1, 1), (1, 1), (2, 1)]])).is_obstructed());
        assert!(obstruct_filling(&knot(-3, &[&[(-1, 1), (0, 2)]])).is_obstructed());
        assert!(obstruct_filling(&twisted_dumbbell()).is_obstructed());
        assert!(!obstruct_filling(&flying_saucer()).is_obstructed());
    }

    #[test]
    fn surfaces_without_genus_check() {
        let r = obstruct_cobordism(&CobordismQuery::new(flying_saucer(), twisted_dumbbell())).unwrap();
        assert!(r.is_obstructed());
        assert_eq!(r.checks.len(), 2);
    }

    #[test]
    fn report_json_shape() {
        let a = knot(-1, &[&[(1, 1)]]);
        let r = obstruct_filling(&a);
        let json = r.to_json();
        assert!(json.starts_with(r#"{"verdict":"not_obstructed","checks":[{"name":"generating families","cite":"#));
        assert!(json.ends_with(r#""genus":[0]}"#));
        let back: ObstructionReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
