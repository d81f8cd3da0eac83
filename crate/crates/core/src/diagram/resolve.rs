use super::classical::MaslovPotential;
use super::front::{ArcId, Event, FrontDiagram};

/// Where a crossing of the Lagrangian resolution comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossingKind {
    /// A crossing of the front.
    Front,
    /// The small loop that replaces a right cusp.
    RightCusp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedCrossing {
    pub id: usize,
    pub kind: CrossingKind,
    /// Index of the front event that produced this crossing.
    pub event: usize,
    /// Upper of the two positions involved at that event.
    pub pos: usize,
    /// For front crossings the strand of lesser slope (upper-left to
    /// lower-right); for right cusps the upper branch.
    pub over: ArcId,
    pub under: ArcId,
    pub degree: i64,
}

/// The Lagrangian projection obtained by resolving a front: front crossings
/// survive and each right cusp becomes a loop with one crossing.
///
/// Disk boundaries are walked column by column over the underlying front,
/// which carries the planar incidence data: at every event the cyclic order
/// of the quadrants is fixed by the two positions involved.
#[derive(Clone, Debug)]
pub struct ResolvedDiagram {
    front: FrontDiagram,
    crossings: Vec<ResolvedCrossing>,
    /// Crossing id for each event, if the event produces one.
    by_event: Vec<Option<usize>>,
    grading_modulus: Option<i64>,
}

impl ResolvedDiagram {
    pub fn crossings(&self) -> &[ResolvedCrossing] {
        &self.crossings
    }

    pub fn front(&self) -> &FrontDiagram {
        &self.front
    }

    pub fn crossing_at_event(&self, event: usize) -> Option<usize> {
        self.by_event[event]
    }

    /// `None` for integer gradings, `Some(m)` for gradings mod `m`.
    pub fn grading_modulus(&self) -> Option<i64> {
        self.grading_modulus
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.crossings.iter().map(|c| c.degree)
    }
}

/// Resolves `d` using the arc labels `mu` to grade crossings.
pub fn lagrangian_resolution(d: &FrontDiagram, mu: &MaslovPotential) -> ResolvedDiagram {
    let mut crossings = Vec::new();
    let mut by_event = vec![None; d.events().len()];
    for (i, &ev) in d.events().iter().enumerate() {
        let col = d.column(i);
        let (kind, pos) = match ev {
            Event::Crossing(p) => (CrossingKind::Front, p),
            Event::RightCusp(p) => (CrossingKind::RightCusp, p),
            Event::LeftCusp(_) => continue,
        };
        let (over, under) = (col[pos - 1], col[pos]);
        let degree = match kind {
            CrossingKind::Front => mu.difference(over, under),
            CrossingKind::RightCusp => 1,
        };
        by_event[i] = Some(crossings.len());
        crossings.push(ResolvedCrossing { id: crossings.len(), kind, event: i, pos, over, under, degree });
    }
    ResolvedDiagram { front: d.clone(), crossings, by_event, grading_modulus: mu.modulus() }
}
