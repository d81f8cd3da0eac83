use std::collections::BTreeMap;

use super::{Dga, Word};

/// Violations of the defining identities of a DGA. Empty means the DGA is
/// consistent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    /// `(a, w)` with `w ∈ ∂a` of the wrong degree.
    pub grading: Vec<(usize, Word)>,
    /// `(a, ∂²a)` for generators with `∂²a ≠ 0`.
    pub d_squared: Vec<(usize, Vec<Word>)>,
}

impl IdentityReport {
    pub fn is_ok(&self) -> bool {
        self.grading.is_empty() && self.d_squared.is_empty()
    }
}

/// Checks that `∂` lowers degree by one and that `∂² = 0`.
pub fn check_identities(g: &Dga) -> IdentityReport {
    let mut report = IdentityReport::default();
    let same = |x: i64, y: i64| match g.grading_modulus() {
        Some(m) => (x - y).rem_euclid(m) == 0,
        None => x == y,
    };
    for a in 0..g.len() {
        for w in g.differential(a) {
            if !same(g.word_degree(w), g.degree(a) - 1) {
                report.grading.push((a, w.clone()));
            }
        }
        let dd = d_squared(g, a);
        if !dd.is_empty() {
            report.d_squared.push((a, dd));
        }
    }
    report
}

/// `∂(∂a)` expanded by the Leibniz rule over Z₂.
fn d_squared(g: &Dga, a: usize) -> Vec<Word> {
    let mut acc: BTreeMap<Word, bool> = BTreeMap::new();
    for w in g.differential(a) {
        for (i, &x) in w.iter().enumerate() {
            for v in g.differential(x) {
                let mut term = Vec::with_capacity(w.len() + v.len());
                term.extend_from_slice(&w[..i]);
                term.extend_from_slice(v);
                term.extend_from_slice(&w[i + 1..]);
                let e = acc.entry(term).or_insert(false);
                *e = !*e;
            }
        }
    }
    acc.into_iter().filter_map(|(w, odd)| odd.then_some(w)).collect()
}
