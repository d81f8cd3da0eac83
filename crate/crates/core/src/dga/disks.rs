use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{Dga, DgaError, Generator, Word};
use crate::diagram::{CrossingKind, Event, ResolvedDiagram};

pub const DEFAULT_MAX_PARTIAL_PATHS: usize = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct DiskSearchOptions {
    /// Abort once this many partial disk boundaries have been generated.
    pub max_partial_paths: usize,
}

impl Default for DiskSearchOptions {
    fn default() -> Self {
        DiskSearchOptions { max_partial_paths: DEFAULT_MAX_PARTIAL_PATHS }
    }
}

/// A disk swept from its left cusp up to the current column: the positions
/// of its upper and lower boundary strands and the negative corners met so
/// far on each boundary, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Partial {
    upper: usize,
    lower: usize,
    upper_corners: Vec<usize>,
    lower_corners: Vec<usize>,
}

impl Partial {
    /// Negative corners read counterclockwise from the positive corner at the
    /// right end: the upper boundary right to left, then the lower boundary.
    fn into_word(self) -> Word {
        let mut w: Word = self.upper_corners.into_iter().rev().collect();
        w.extend(self.lower_corners);
        w
    }
}

pub fn build_dga(r: &ResolvedDiagram) -> Result<Dga, DgaError> {
    build_dga_with(r, DiskSearchOptions::default())
}

/// Counts admissible disks of the resolution, sweeping every disk from its
/// left cusp to its positive corner. In plat position every disk has one
/// left cusp and x-monotone upper and lower boundaries. Partial disks with
/// identical state are merged mod 2, since they have identical
/// continuations.
pub fn build_dga_with(r: &ResolvedDiagram, opts: DiskSearchOptions) -> Result<Dga, DgaError> {
    if !r.front().is_plat() {
        return Err(DgaError::NotPlat);
    }
    let n = r.crossings().len();
    let mut counts: Vec<BTreeMap<Word, bool>> = vec![BTreeMap::new(); n];
    for c in r.crossings() {
        if c.kind == CrossingKind::RightCusp {
            // the disk filling the cusp loop itself
            toggle(&mut counts[c.id], Word::new());
        }
    }

    let mut live: HashMap<Partial, bool> = HashMap::new();
    let mut generated = 0usize;
    for (i, &ev) in r.front().events().iter().enumerate() {
        let mut next: HashMap<Partial, bool> = HashMap::with_capacity(live.len());
        let push = |p: Partial, next: &mut HashMap<Partial, bool>| {
            let e = next.entry(p).or_insert(false);
            *e = !*e;
        };
        for (mut p, odd) in live.drain() {
            if !odd {
                continue;
            }
            match ev {
                Event::LeftCusp(q) => {
                    if q <= p.upper {
                        p.upper += 2;
                        p.lower += 2;
                    } else if q <= p.lower {
                        p.lower += 2;
                    }
                    push(p, &mut next);
                }
                Event::RightCusp(q) => {
                    let (u, l) = (p.upper, p.lower);
                    if q + 1 < u {
                        p.upper -= 2;
                        p.lower -= 2;
                        push(p, &mut next);
                    } else if q > l {
                        push(p, &mut next);
                    } else if q == u && q + 1 == l {
                        let id = r.crossing_at_event(i).expect("right cusps are resolved");
                        toggle(&mut counts[id], p.into_word());
                    }
                    // otherwise a boundary strand turns back at the cusp
                }
                Event::Crossing(k) => {
                    let id = r.crossing_at_event(i).expect("crossings are resolved");
                    let (u, l) = (p.upper, p.lower);
                    if k == u && k + 1 == l {
                        toggle(&mut counts[id], p.into_word());
                    } else if k + 1 < u || k > l || (k > u && k + 1 < l) {
                        push(p, &mut next);
                    } else if k + 1 == u {
                        // convex turn below the crossing, or follow the strand up
                        let mut turn = p.clone();
                        turn.upper_corners.push(id);
                        push(turn, &mut next);
                        p.upper = k;
                        push(p, &mut next);
                    } else if k == l {
                        let mut turn = p.clone();
                        turn.lower_corners.push(id);
                        push(turn, &mut next);
                        p.lower = k + 1;
                        push(p, &mut next);
                    } else if k == u {
                        p.upper = k + 1;
                        push(p, &mut next);
                    } else {
                        debug_assert_eq!(k + 1, l);
                        p.lower = k;
                        push(p, &mut next);
                    }
                }
            }
        }
        if let Event::LeftCusp(q) = ev {
            push(Partial { upper: q, lower: q + 1, upper_corners: Vec::new(), lower_corners: Vec::new() }, &mut next);
        }
        generated += next.len();
        if generated > opts.max_partial_paths {
            return Err(DgaError::SearchExplosion { limit: opts.max_partial_paths, event: i + 1 });
        }
        live = next;
    }

    let generators = r
        .crossings()
        .iter()
        .map(|c| Generator { id: c.id, degree: c.degree, kind: c.kind })
        .collect();
    let differential = counts
        .into_iter()
        .map(|m| m.into_iter().filter_map(|(w, odd)| odd.then_some(w)).collect::<BTreeSet<Word>>())
        .collect();
    Dga::new(generators, differential, r.grading_modulus())
}

fn toggle(m: &mut BTreeMap<Word, bool>, w: Word) {
    let e = m.entry(w).or_insert(false);
    *e = !*e;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{lagrangian_resolution, maslov_potential, parse_front};

    fn dga_of(text: &str) -> Dga {
        let d = parse_front(text).unwrap();
        build_dga(&lagrangian_resolution(&d, &maslov_potential(&d))).unwrap()
    }

    #[test]
    fn unknot_differential_vanishes() {
        let g = dga_of("L 1\nR 1");
        assert_eq!(g.len(), 1);
        assert_eq!(g.degree(0), 1);
        assert!(g.differential(0).is_empty());
    }

    #[test]
    fn trefoil_generators() {
        let g = dga_of("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1");
        assert_eq!(g.len(), 5);
        let degrees: Vec<i64> = g.generators().iter().map(|x| x.degree).collect();
        assert_eq!(degrees, vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn rejects_fronts_out_of_plat_position() {
        let d = parse_front("L 1\nL 1\nL 4\nX 3\nR 2\nL 2\nX 3\nR 4\nX 2\nR 1\nR 1").unwrap();
        let r = lagrangian_resolution(&d, &maslov_potential(&d));
        assert!(matches!(build_dga(&r), Err(DgaError::NotPlat)));
    }

    #[test]
    fn explosion_guard() {
        let d = parse_front("L 1\nL 1\nX 2\nX 2\nX 2\nR 1\nR 1").unwrap();
        let r = lagrangian_resolution(&d, &maslov_potential(&d));
        let err = build_dga_with(&r, DiskSearchOptions { max_partial_paths: 3 }).unwrap_err();
        assert!(matches!(err, DgaError::SearchExplosion { limit: 3, .. }));
    }
}
