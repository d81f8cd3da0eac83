use std::collections::BTreeMap;

use super::front::{ArcId, Event, FrontDiagram};

/// Direction in which the fixed orientation traverses each arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    /// `rightward[arc]` is true when the knot runs left to right along `arc`.
    pub rightward: Vec<bool>,
    /// Arcs in traversal order, starting from the upper arc of the first
    /// left cusp.
    pub order: Vec<ArcId>,
    pub down_cusps: usize,
    pub up_cusps: usize,
}

/// Traverses the knot starting on the upper branch of the first left cusp,
/// heading right.
pub fn orientation(d: &FrontDiagram) -> Orientation {
    orientation_from(d, true)
}

/// Like [`orientation`] but starting on the chosen branch of the first left
/// cusp. Starting on the lower branch reverses the orientation.
pub fn orientation_from(d: &FrontDiagram, start_upper: bool) -> Orientation {
    let n = d.arcs().len();
    let mut rightward = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let (mut down, mut up) = (0, 0);
    let first = (0..n).find(|&a| d.arcs()[a].start == 0 && d.arcs()[a].upper_at_start == start_upper).expect("first event is a left cusp");
    let mut arc = first;
    loop {
        // heading right along `arc`
        rightward[arc] = true;
        order.push(arc);
        let back = d.right_partner(arc);
        if d.arcs()[arc].upper_at_end { down += 1 } else { up += 1 }
        // heading left along `back`
        order.push(back);
        let next = d.left_partner(back);
        if d.arcs()[back].upper_at_start { down += 1 } else { up += 1 }
        if next == first {
            break;
        }
        arc = next;
    }
    Orientation { rightward, order, down_cusps: down, up_cusps: up }
}

/// Signed crossing count: a crossing is positive when both strands run in
/// the same horizontal direction.
pub fn writhe(d: &FrontDiagram) -> i64 {
    let o = orientation(d);
    d.events()
        .iter()
        .enumerate()
        .filter_map(|(i, ev)| match *ev {
            Event::Crossing(p) => {
                let col = d.column(i);
                Some(if o.rightward[col[p - 1]] == o.rightward[col[p]] { 1 } else { -1 })
            }
            _ => None,
        })
        .sum()
}

/// Writhe minus half the number of cusps.
pub fn thurston_bennequin(d: &FrontDiagram) -> i64 {
    writhe(d) - (d.cusp_count() / 2) as i64
}

/// Half of (down cusps − up cusps) along the traversal orientation.
pub fn rotation_number(d: &FrontDiagram) -> i64 {
    rotation_number_from(d, true)
}

/// Rotation number for the orientation of [`orientation_from`].
pub fn rotation_number_from(d: &FrontDiagram, start_upper: bool) -> i64 {
    let o = orientation_from(d, start_upper);
    (o.down_cusps as i64 - o.up_cusps as i64) / 2
}

/// Integer labels on arcs, one higher on the upper branch of every cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaslovPotential {
    values: Vec<i64>,
    /// `Some(2|r|)` when the rotation number `r` is nonzero.
    modulus: Option<i64>,
}

impl MaslovPotential {
    pub fn value(&self, arc: ArcId) -> i64 {
        self.values[arc]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn modulus(&self) -> Option<i64> {
        self.modulus
    }

    pub fn is_integral(&self) -> bool {
        self.modulus.is_none()
    }

    /// Difference of two labels, reduced when the grading is cyclic.
    pub fn difference(&self, a: ArcId, b: ArcId) -> i64 {
        let diff = self.values[a] - self.values[b];
        match self.modulus {
            Some(m) => diff.rem_euclid(m),
            None => diff,
        }
    }

    /// Arc labels keyed by arc id.
    pub fn as_map(&self) -> BTreeMap<ArcId, i64> {
        self.values.iter().copied().enumerate().collect()
    }
}

/// Propagates the cusp rule along the knot. For rotation 0 the result is
/// normalized to minimum 0; otherwise labels are reduced mod `2|r|`.
pub fn maslov_potential(d: &FrontDiagram) -> MaslovPotential {
    let o = orientation(d);
    let mut values = vec![0i64; d.arcs().len()];
    let mut current = 0i64;
    for w in o.order.windows(2) {
        let (from, to) = (w[0], w[1]);
        values[from] = current;
        // passing from the upper branch of a cusp to the lower one drops the label
        let upper_to_lower = if o.rightward[from] { d.arcs()[from].upper_at_end } else { d.arcs()[from].upper_at_start };
        current += if upper_to_lower { -1 } else { 1 };
        values[to] = current;
    }
    let rot = (o.down_cusps as i64 - o.up_cusps as i64) / 2;
    let modulus = if rot == 0 { None } else { Some(2 * rot.abs()) };
    match modulus {
        None => {
            let min = values.iter().copied().min().unwrap_or(0);
            values.iter_mut().for_each(|v| *v -= min);
        }
        Some(m) => values.iter_mut().for_each(|v| *v = v.rem_euclid(m)),
    }
    MaslovPotential { values, modulus }
}
