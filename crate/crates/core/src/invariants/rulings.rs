use serde::Serialize;

use crate::diagram::{lagrangian_resolution, maslov_potential, Event, FrontDiagram};

/// A graded normal ruling of a front.
///
/// `pairing[i]` is the companion involution on positions (0-based) in the
/// column just before event `i`; `switches` lists the event indices of the
/// switched crossings, ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Ruling {
    pub switches: Vec<usize>,
    pub pairing: Vec<Vec<usize>>,
}

impl Ruling {
    pub fn switch_count(&self) -> usize {
        self.switches.len()
    }
}

/// Whether a switch at positions `k`, `k + 1` with companions `a` of `k` and
/// `b` of `k + 1` leaves the two pairs disjoint or nested.
fn normal_at_switch(k: usize, a: usize, b: usize) -> bool {
    (a < k && b > k + 1) || (b < a && a < k) || (k + 1 < b && b < a)
}

/// All graded normal rulings of `d`, switch choices explored depth first
/// with "no switch" before "switch" at each crossing.
pub fn enumerate_graded_rulings(d: &FrontDiagram) -> Vec<Ruling> {
    let r = lagrangian_resolution(d, &maslov_potential(d));
    let graded_zero = |event: usize| {
        let deg = r.crossings()[r.crossing_at_event(event).expect("crossing event")].degree;
        match r.grading_modulus() {
            None | Some(0) => deg == 0,
            Some(m) => deg.rem_euclid(m) == 0,
        }
    };
    let mut out = Vec::new();
    let mut columns = Vec::with_capacity(d.events().len() + 1);
    let mut switches = Vec::new();
    sweep(d, &graded_zero, 0, Vec::new(), &mut columns, &mut switches, &mut out);
    out
}

fn sweep(
    d: &FrontDiagram,
    graded_zero: &dyn Fn(usize) -> bool,
    i: usize,
    pairing: Vec<usize>,
    columns: &mut Vec<Vec<usize>>,
    switches: &mut Vec<usize>,
    out: &mut Vec<Ruling>,
) {
    let Some(&ev) = d.events().get(i) else {
        out.push(Ruling { switches: switches.clone(), pairing: columns.clone() });
        return;
    };
    columns.push(pairing.clone());
    match ev {
        Event::LeftCusp(p) => {
            let p = p - 1;
            let shift = |x: usize| if x >= p { x + 2 } else { x };
            let mut next: Vec<usize> = pairing.iter().map(|&x| shift(x)).collect();
            next.splice(p..p, [p + 1, p]);
            sweep(d, graded_zero, i + 1, next, columns, switches, out);
        }
        Event::RightCusp(p) => {
            let p = p - 1;
            if pairing[p] == p + 1 {
                let unshift = |x: usize| if x > p + 1 { x - 2 } else { x };
                let mut next = pairing.clone();
                next.drain(p..p + 2);
                for x in &mut next {
                    *x = unshift(*x);
                }
                sweep(d, graded_zero, i + 1, next, columns, switches, out);
            }
        }
        Event::Crossing(p) => {
            let k = p - 1;
            let (a, b) = (pairing[k], pairing[k + 1]);
            if a != k + 1 {
                // strands pass through: companions follow them
                let mut next = pairing.clone();
                next.swap(k, k + 1);
                next[a] = k + 1;
                next[b] = k;
                sweep(d, graded_zero, i + 1, next, columns, switches, out);
                if graded_zero(i) && normal_at_switch(k, a, b) {
                    switches.push(i);
                    sweep(d, graded_zero, i + 1, pairing.clone(), columns, switches, out);
                    switches.pop();
                }
            }
        }
    }
    columns.pop();
}
