use super::front::{Event, FrontDiagram};
use super::DiagramError;
use Event::*;

pub const BUILTIN_NAMES: &[&str] = &["unknot", "trefoil", "m52_K1", "m52_K2", "m821"];

/// One negative half twist of a twist knot: a crossing drawn with a zigzag
/// shaped like the letter Z or S. The sign records the orientation of the
/// zigzag's cusps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HalfTwist {
    ZPlus,
    ZMinus,
    SPlus,
    SMinus,
}

impl HalfTwist {
    pub fn is_z(self) -> bool {
        matches!(self, HalfTwist::ZPlus | HalfTwist::ZMinus)
    }

    pub fn is_plus(self) -> bool {
        matches!(self, HalfTwist::ZPlus | HalfTwist::SPlus)
    }

    fn label(self) -> &'static str {
        match self {
            HalfTwist::ZPlus => "Z+",
            HalfTwist::ZMinus => "Z-",
            HalfTwist::SPlus => "S+",
            HalfTwist::SMinus => "S-",
        }
    }
}

/// Looks up a named diagram. Besides [`BUILTIN_NAMES`], accepts
/// `twist(M,WORD)`, e.g. `twist(-5,Z+Z+Z-)`.
pub fn builtin(name: &str) -> Result<FrontDiagram, DiagramError> {
    let plat = |bridges: usize, word: &[usize]| {
        let mut ev = vec![LeftCusp(1); bridges];
        ev.extend(word.iter().map(|&k| Crossing(k)));
        ev.extend(std::iter::repeat_n(RightCusp(1), bridges));
        ev
    };
    let events = match name {
        "unknot" => plat(1, &[]),
        "trefoil" => plat(2, &[2, 2, 2]),
        "m52_K1" => plat(2, &[2, 2, 2, 1, 1, 2, 2]),
        "m52_K2" => plat(2, &[2, 2, 2, 3, 1, 2, 2]),
        "m821" => plat(3, &[4, 4, 2, 3, 3, 4, 2, 2]),
        other => {
            if let Some((m, word)) = parse_twist_name(other) {
                return twist_knot(m, &parse_twist_word(word)?);
            }
            return Err(DiagramError::UnknownBuiltin(other.to_string()));
        }
    };
    FrontDiagram::new(events)
}

fn parse_twist_name(name: &str) -> Option<(i64, &str)> {
    let inner = name.strip_prefix("twist(")?.strip_suffix(')')?;
    let (m, word) = inner.split_once(',')?;
    Some((m.trim().parse().ok()?, word.trim()))
}

/// Parses a half-twist word such as `Z+Z+Z-`; `−` is accepted for `-`.
pub fn parse_twist_word(word: &str) -> Result<Vec<HalfTwist>, DiagramError> {
    let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
    if !chars.len().is_multiple_of(2) {
        return Err(DiagramError::InvalidTwist(format!("`{word}` is not a sequence of Z+, Z-, S+, S-")));
    }
    chars
        .chunks(2)
        .map(|pair| match (pair[0], pair[1]) {
            ('Z', '+') => Ok(HalfTwist::ZPlus),
            ('Z', '-' | '−') => Ok(HalfTwist::ZMinus),
            ('S', '+') => Ok(HalfTwist::SPlus),
            ('S', '-' | '−') => Ok(HalfTwist::SMinus),
            (a, b) => Err(DiagramError::InvalidTwist(format!("unknown half twist `{a}{b}`"))),
        })
        .collect()
}

pub fn twist_word_string(word: &[HalfTwist]) -> String {
    word.iter().map(|h| h.label()).collect()
}

/// The half twist word of the odd twist knot representative with `z_minus`
/// minus-type Z crossings: Z at every odd position, Z at the first `z_minus`
/// even positions, S at the remaining ones.
pub fn odd_twist_word(n: usize, z_minus: usize) -> Vec<HalfTwist> {
    (0..2 * n - 1)
        .map(|i| {
            if i % 2 == 0 {
                HalfTwist::ZPlus
            } else if i / 2 < z_minus {
                HalfTwist::ZMinus
            } else {
                HalfTwist::SMinus
            }
        })
        .collect()
}

/// Front of the twist knot K_m, m ≤ −3, with |m + 2| negative half twists.
///
/// Each half twist is a crossing plus a zigzag on one of the two twisting
/// strands; only the Z/S shape of a letter affects the drawing. The signs of
/// the zigzag cusps alternate along the twist region whatever the labels say,
/// so odd positions are always of plus type and even positions of minus type.
/// The drawn front is moved into plat position before it is returned.
pub fn twist_knot(m: i64, word: &[HalfTwist]) -> Result<FrontDiagram, DiagramError> {
    if m > -3 {
        return Err(DiagramError::InvalidTwist(format!("m = {m}; twist knots need m ≤ -3")));
    }
    let k = (m + 2).unsigned_abs() as usize;
    if word.len() != k {
        return Err(DiagramError::InvalidTwist(format!("m = {m} needs {k} half twists, word has {}", word.len())));
    }
    let mut ev = vec![LeftCusp(1), LeftCusp(1), Crossing(2)];
    for h in word {
        // twisting strands sit at positions 1 and 2
        if h.is_z() {
            ev.extend([LeftCusp(3), Crossing(2), RightCusp(1)]);
        } else {
            ev.extend([LeftCusp(1), Crossing(2), RightCusp(3)]);
        }
    }
    ev.extend([Crossing(2), Crossing(2), RightCusp(1), RightCusp(1)]);
    FrontDiagram::new(into_plat(ev))
}

fn phase(e: Event) -> u8 {
    match e {
        LeftCusp(_) => 0,
        Crossing(_) => 1,
        RightCusp(_) => 2,
    }
}

/// Moves every left cusp to the far left and every right cusp to the far
/// right, then pulls nested cusps out of the cusp enclosing them. Cusps pass
/// freely past events they do not touch; a cusp blocked by a crossing of the
/// two strands around it first passes through the strand above, adding two
/// crossings.
fn into_plat(mut ev: Vec<Event>) -> Vec<Event> {
    loop {
        while let Some(i) = (0..ev.len().saturating_sub(1)).find(|&i| phase(ev[i]) > phase(ev[i + 1])) {
            let swapped = commute(ev[i], ev[i + 1]);
            ev.splice(i..i + 2, swapped);
        }
        let mut changed = false;
        let mut out = Vec::with_capacity(ev.len());
        for e in ev {
            match e {
                LeftCusp(p) if p % 2 == 0 => {
                    out.extend([LeftCusp(p - 1), Crossing(p), Crossing(p - 1)]);
                    changed = true;
                }
                RightCusp(q) if q % 2 == 0 => {
                    out.extend([Crossing(q - 1), Crossing(q), RightCusp(q - 1)]);
                    changed = true;
                }
                e => out.push(e),
            }
        }
        ev = out;
        if !changed {
            return ev;
        }
    }
}

/// Rewrites the adjacent pair `a b`, where `b` belongs further left, as an
/// equivalent sequence with `b` first.
fn commute(a: Event, b: Event) -> Vec<Event> {
    match (a, b) {
        (Crossing(k), LeftCusp(p)) => {
            if k + 2 <= p {
                vec![LeftCusp(p), Crossing(k)]
            } else if k >= p {
                vec![LeftCusp(p), Crossing(k + 2)]
            } else {
                vec![Crossing(k), LeftCusp(p - 1), Crossing(p), Crossing(p - 1)]
            }
        }
        (RightCusp(q), LeftCusp(p)) => {
            if p <= q {
                vec![LeftCusp(p), RightCusp(q + 2)]
            } else {
                vec![LeftCusp(p + 2), RightCusp(q)]
            }
        }
        (RightCusp(q), Crossing(k)) => {
            if k + 2 <= q {
                vec![Crossing(k), RightCusp(q)]
            } else if k >= q {
                vec![Crossing(k + 2), RightCusp(q)]
            } else {
                vec![Crossing(q - 1), Crossing(q), RightCusp(q - 1), Crossing(k)]
            }
        }
        _ => unreachable!("only out-of-phase pairs are commuted"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{rotation_number, thurston_bennequin};

    #[test]
    fn named_fronts_are_plat() {
        for name in BUILTIN_NAMES {
            assert!(builtin(name).unwrap().is_plat(), "{name}");
        }
    }

    #[test]
    fn chekanov_pair_shapes() {
        let (k1, k2) = (builtin("m52_K1").unwrap(), builtin("m52_K2").unwrap());
        assert_ne!(k1, k2);
        assert_eq!(k1.crossing_count(), k2.crossing_count());
        assert_eq!(thurston_bennequin(&k1), 1);
        assert_eq!(thurston_bennequin(&k2), 1);
    }

    #[test]
    fn twist_word_parsing() {
        let w = parse_twist_word("Z+Z+Z−").unwrap();
        assert_eq!(w, vec![HalfTwist::ZPlus, HalfTwist::ZPlus, HalfTwist::ZMinus]);
        assert_eq!(twist_word_string(&w), "Z+Z+Z-");
        assert!(parse_twist_word("Z+Q-").is_err());
        assert!(parse_twist_word("Z+Z").is_err());
    }

    #[test]
    fn twist_length_checked() {
        let w = parse_twist_word("Z+Z-").unwrap();
        assert!(matches!(twist_knot(-5, &w), Err(DiagramError::InvalidTwist(_))));
        assert!(matches!(twist_knot(-2, &[]), Err(DiagramError::InvalidTwist(_))));
    }

    #[test]
    fn twist_knots_have_max_tb_shape() {
        for n in 1..=3 {
            for z in 0..n {
                let d = twist_knot(-2 * n as i64 - 1, &odd_twist_word(n, z)).unwrap();
                assert!(d.is_plat());
                assert_eq!(thurston_bennequin(&d), -3);
                assert_eq!(rotation_number(&d), 0);
            }
        }
    }

    #[test]
    fn twist_by_name() {
        let d = builtin("twist(-5,Z+Z+Z-)").unwrap();
        assert_eq!(d, twist_knot(-5, &parse_twist_word("Z+Z+Z-").unwrap()).unwrap());
        assert!(matches!(builtin("twist(-5,Z+)"), Err(DiagramError::InvalidTwist(_))));
        assert!(matches!(builtin("figure8"), Err(DiagramError::UnknownBuiltin(_))));
    }
}
