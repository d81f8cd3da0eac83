use std::fmt;

use super::DiagramError;

/// One column event of a front in plat-style position. Positions are 1-based
/// and count live strands from the top of the diagram at that column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Event {
    /// A new pair of strands born at positions `pos` and `pos + 1`.
    LeftCusp(usize),
    /// The strands at `pos` and `pos + 1` meet and die.
    RightCusp(usize),
    /// The strands at `pos` and `pos + 1` cross.
    Crossing(usize),
}

impl Event {
    pub fn pos(self) -> usize {
        match self {
            Event::LeftCusp(p) | Event::RightCusp(p) | Event::Crossing(p) => p,
        }
    }

    fn tag(self) -> char {
        match self {
            Event::LeftCusp(_) => 'L',
            Event::RightCusp(_) => 'R',
            Event::Crossing(_) => 'X',
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.tag(), self.pos())
    }
}

/// Index of an arc: a maximal piece of the front running left to right from
/// a left cusp to a right cusp. Crossings do not break arcs.
pub type ArcId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    /// Event index of the left cusp where the arc is born.
    pub start: usize,
    /// Event index of the right cusp where the arc dies.
    pub end: usize,
    /// Whether the arc is the upper branch of its left cusp.
    pub upper_at_start: bool,
    /// Whether the arc is the upper branch of its right cusp.
    pub upper_at_end: bool,
}

/// A validated front diagram of a Legendrian knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontDiagram {
    events: Vec<Event>,
    arcs: Vec<Arc>,
    /// `columns[i]` lists the arcs at positions `1..` just before event `i`;
    /// `columns[events.len()]` is empty.
    columns: Vec<Vec<ArcId>>,
}

impl FrontDiagram {
    /// Validates an event list: plat closure, positions in range, and a single
    /// component.
    pub fn new(events: Vec<Event>) -> Result<Self, DiagramError> {
        if events.is_empty() {
            return Err(DiagramError::Empty);
        }
        let mut arcs: Vec<Arc> = Vec::new();
        let mut columns = Vec::with_capacity(events.len() + 1);
        let mut live: Vec<ArcId> = Vec::new();
        for (i, &ev) in events.iter().enumerate() {
            columns.push(live.clone());
            let strands = live.len();
            let p = ev.pos();
            let in_range = match ev {
                Event::LeftCusp(_) => (1..=strands + 1).contains(&p),
                Event::RightCusp(_) | Event::Crossing(_) => p >= 1 && p < strands,
            };
            if !in_range {
                return Err(DiagramError::OutOfRange { event: i + 1, tag: ev.tag(), pos: p, strands });
            }
            match ev {
                Event::LeftCusp(p) => {
                    let upper = arcs.len();
                    for upper_at_start in [true, false] {
                        arcs.push(Arc { start: i, end: usize::MAX, upper_at_start, upper_at_end: false });
                    }
                    live.splice(p - 1..p - 1, [upper, upper + 1]);
                }
                Event::RightCusp(p) => {
                    for (k, upper_at_end) in [(p - 1, true), (p, false)] {
                        let arc = &mut arcs[live[k]];
                        arc.end = i;
                        arc.upper_at_end = upper_at_end;
                    }
                    live.drain(p - 1..=p);
                }
                Event::Crossing(p) => live.swap(p - 1, p),
            }
        }
        if !live.is_empty() {
            return Err(DiagramError::NotClosed { strands: live.len() });
        }
        columns.push(Vec::new());
        let d = FrontDiagram { events, arcs, columns };
        let components = d.component_count();
        if components != 1 {
            return Err(DiagramError::MultiComponent { components });
        }
        Ok(d)
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Arcs at each position just before event `i` (`i == events().len()` is
    /// the empty final column).
    pub fn column(&self, i: usize) -> &[ArcId] {
        &self.columns[i]
    }

    /// Plat position: every left cusp comes before every crossing, every
    /// right cusp after, and no cusp is nested inside another.
    pub fn is_plat(&self) -> bool {
        let phase = |e: &Event| match e {
            Event::LeftCusp(_) => 0,
            Event::Crossing(_) => 1,
            Event::RightCusp(_) => 2,
        };
        self.events.windows(2).all(|w| phase(&w[0]) <= phase(&w[1]))
            && self.events.iter().all(|e| matches!(e, Event::Crossing(_)) || e.pos() % 2 == 1)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Crossing(_))).count()
    }

    pub fn cusp_count(&self) -> usize {
        self.events.len() - self.crossing_count()
    }

    pub fn right_cusp_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::RightCusp(_))).count()
    }

    pub fn max_strands(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The arc sharing a cusp with `arc` at its left end.
    pub(crate) fn left_partner(&self, arc: ArcId) -> ArcId {
        if self.arcs[arc].upper_at_start { arc + 1 } else { arc - 1 }
    }

    /// The arc sharing a cusp with `arc` at its right end.
    pub(crate) fn right_partner(&self, arc: ArcId) -> ArcId {
        let a = &self.arcs[arc];
        let col = &self.columns[a.end];
        let p = self.events[a.end].pos();
        if a.upper_at_end { col[p] } else { col[p - 1] }
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.arcs.len()];
        let mut components = 0;
        for start in 0..self.arcs.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut arc = start;
            loop {
                seen[arc] = true;
                let next = self.left_partner(arc);
                seen[next] = true;
                arc = self.right_partner(next);
                if seen[arc] {
                    break;
                }
            }
        }
        components
    }

    /// Reflection `z ↦ -z`: reverses positions in every column.
    pub fn mirror_z(&self) -> FrontDiagram {
        let events = self
            .events
            .iter()
            .enumerate()
            .map(|(i, &ev)| {
                let s = self.columns[i].len();
                match ev {
                    Event::LeftCusp(p) => Event::LeftCusp(s + 2 - p),
                    Event::RightCusp(p) => Event::RightCusp(s - p),
                    Event::Crossing(p) => Event::Crossing(s - p),
                }
            })
            .collect();
        FrontDiagram::new(events).expect("mirror of a valid diagram is valid")
    }

    /// Serializes to the front file format.
    pub fn to_front_text(&self) -> String {
        self.events.iter().map(|e| format!("{e}\n")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Event::*;

    #[test]
    fn unknot_arcs_and_columns() {
        let d = FrontDiagram::new(vec![LeftCusp(1), RightCusp(1)]).unwrap();
        assert_eq!(d.arcs().len(), 2);
        assert_eq!(d.column(1), &[0, 1]);
        assert_eq!(d.right_partner(0), 1);
        assert_eq!(d.left_partner(1), 0);
    }

    #[test]
    fn two_unknots_are_a_link() {
        let err = FrontDiagram::new(vec![LeftCusp(1), LeftCusp(3), RightCusp(1), RightCusp(1)]).unwrap_err();
        assert_eq!(err, DiagramError::MultiComponent { components: 2 });
    }

    #[test]
    fn unclosed() {
        let err = FrontDiagram::new(vec![LeftCusp(1)]).unwrap_err();
        assert_eq!(err, DiagramError::NotClosed { strands: 2 });
    }

    #[test]
    fn right_cusp_range() {
        let err = FrontDiagram::new(vec![LeftCusp(1), RightCusp(2)]).unwrap_err();
        assert!(matches!(err, DiagramError::OutOfRange { event: 2, pos: 2, strands: 2, .. }));
    }

    #[test]
    fn mirror_is_involution() {
        let d = FrontDiagram::new(vec![LeftCusp(1), LeftCusp(1), Crossing(2), Crossing(2), Crossing(2), RightCusp(1), RightCusp(1)])
            .unwrap();
        assert_eq!(d.mirror_z().mirror_z(), d);
    }
}
