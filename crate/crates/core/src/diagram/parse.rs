use super::front::{Event, FrontDiagram};
use super::DiagramError;

/// Parses the front file format: one `L|R|X <pos>` event per line, `#`
/// starts a comment, blank lines are ignored.
pub fn parse_front(text: &str) -> Result<FrontDiagram, DiagramError> {
    let mut events = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |token: &str, message: &str| DiagramError::Syntax {
            line: line_no,
            token: token.to_string(),
            message: message.to_string(),
        };
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().expect("nonempty line has a token");
        let Some(pos) = tokens.next() else {
            return Err(syntax(tag, "missing position"));
        };
        if let Some(extra) = tokens.next() {
            return Err(syntax(extra, "unexpected trailing token"));
        }
        // the tag must be separated from the integer by whitespace
        if tag.len() != 1 {
            return Err(syntax(tag, "expected one of L, R, X"));
        }
        let pos: usize = match pos.parse() {
            Ok(p) if !pos.starts_with('+') => p,
            _ => return Err(syntax(pos, "expected a positive integer")),
        };
        if pos == 0 {
            return Err(syntax("0", "positions are 1-based"));
        }
        events.push(match tag {
            "L" => Event::LeftCusp(pos),
            "R" => Event::RightCusp(pos),
            "X" => Event::Crossing(pos),
            other => return Err(syntax(other, "expected one of L, R, X")),
        });
    }
    FrontDiagram::new(events)
}
