//! Custom move files.
//!
//! Three layouts are accepted, detected from the content:
//! - JSON: `{"moves": [[x, y], ...], "symmetric": bool}` (`symmetric` optional)
//! - CSV: a header line `x,y` followed by `x,y` rows
//! - text: one `x y` pair per line
//!
//! Blank lines and lines starting with `#` are skipped in CSV and text files.
//! The zero vector is not a move and is dropped.

use serde::Deserialize;

use crate::engine::Pos;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveFile {
    pub moves: Vec<Pos>,
    /// Set only by the JSON layout.
    pub symmetric: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonMoves {
    moves: Vec<(u32, u32)>,
    #[serde(default)]
    symmetric: Option<bool>,
}

pub fn parse(text: &str) -> Result<MoveFile, String> {
    if text.trim_start().starts_with('{') {
        let parsed: JsonMoves = serde_json::from_str(text).map_err(|e| format!("bad JSON move file: {e}"))?;
        return Ok(MoveFile {
            moves: parsed.moves.into_iter().filter(|&m| m != (0, 0)).collect(),
            symmetric: parsed.symmetric,
        });
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let csv = lines.peek().is_some_and(|(_, l)| l.replace(' ', "") == "x,y");
    if csv {
        lines.next();
    }
    let mut moves = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = if csv {
            line.split(',').map(str::trim).collect()
        } else {
            line.split_whitespace().collect()
        };
        let pos = match fields.as_slice() {
            [x, y] => x.parse::<u32>().ok().zip(y.parse::<u32>().ok()),
            _ => None,
        };
        let pos = pos.ok_or_else(|| format!("line {no}: expected two non-negative integers, found '{line}'"))?;
        if pos != (0, 0) {
            moves.push(pos);
        }
    }
    Ok(MoveFile { moves, symmetric: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_layouts() {
        let want = vec![(1, 2), (3, 0)];
        let text = parse("# moves\n1 2\n\n3   0\n0 0\n").unwrap();
        assert_eq!(text.moves, want);
        let csv = parse("x,y\n0,0\n1,2\n3,0\n").unwrap();
        assert_eq!(csv.moves, want);
        let json = parse(r#"{"moves": [[1,2],[3,0]], "symmetric": true}"#).unwrap();
        assert_eq!(json.moves, want);
        assert_eq!(json.symmetric, Some(true));
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse("1 2\n3\n").unwrap_err();
        assert!(e.starts_with("line 2"), "{e}");
        assert!(parse("x,y\n1,-2\n").is_err());
        assert!(parse(r#"{"moves": [[1,2,3]]}"#).is_err());
    }
}
