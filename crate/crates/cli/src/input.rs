use std::path::Path;

use anyhow::{bail, Context, Result};
use geoshapley::Point;

/// Reads points from CSV (`x,y` or a single `x` column per line, `#`
/// comments, optional header) or from JSON `{"points": [[x, y], ...]}`.
pub fn read_points(path: &Path) -> Result<Vec<Point>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
        || text.trim_start().starts_with('{');
    if is_json {
        parse_json(&text)
    } else {
        parse_csv(&text)
    }
}

pub fn parse_json(text: &str) -> Result<Vec<Point>> {
    let v: serde_json::Value = serde_json::from_str(text).context("parsing JSON input")?;
    let Some(items) = v.get("points").and_then(|p| p.as_array()) else {
        bail!("JSON input needs a \"points\" array");
    };
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let coord = |k: usize| item.get(k).and_then(|c| c.as_f64());
            match (item.as_array().map(Vec::len), coord(0), coord(1)) {
                (Some(1), Some(x), _) => Ok(Point::new(x, 0.0)),
                (Some(2), Some(x), Some(y)) => Ok(Point::new(x, y)),
                _ => bail!("point {i} must be [x, y] or [x]"),
            }
        })
        .collect()
}

pub fn parse_csv(text: &str) -> Result<Vec<Point>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut columns: Option<(usize, Option<usize>)> = None;
    let mut out = Vec::new();
    for (line, rec) in reader.records().enumerate() {
        let rec = rec.context("parsing CSV input")?;
        if rec.iter().all(|f| f.is_empty()) {
            continue;
        }
        if columns.is_none() && out.is_empty() && rec.iter().any(|f| f.parse::<f64>().is_err()) {
            // header: use the columns named x and y when present
            let find = |name: &str| rec.iter().position(|f| f.eq_ignore_ascii_case(name));
            columns = Some(match (find("x"), find("y")) {
                (Some(x), y) => (x, y),
                _ => (0, (rec.len() > 1).then_some(1)),
            });
            continue;
        }
        let (cx, cy) = *columns.get_or_insert((0, (rec.len() > 1).then_some(1)));
        let field = |c: usize| -> Result<f64> {
            let f = rec.get(c).with_context(|| format!("record {}: missing column {}", line + 1, c + 1))?;
            f.parse().with_context(|| format!("record {}: `{f}` is not a number", line + 1))
        };
        let x = field(cx)?;
        let y = match cy {
            Some(c) => field(c)?,
            None => 0.0,
        };
        out.push(Point::new(x, y));
    }
    if out.is_empty() {
        bail!("no points in input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_variants() {
        let p = parse_csv("# three points\nx,y\n1,2\n3, 4\n\n5,6\n").unwrap();
        assert_eq!(p, vec![Point::new(1., 2.), Point::new(3., 4.), Point::new(5., 6.)]);
        let p = parse_csv("1\n2\n3\n").unwrap();
        assert_eq!(p[2], Point::new(3., 0.));
        let p = parse_csv("index,x,y,shapley\n0,1.5,2.5,9\n").unwrap();
        assert_eq!(p, vec![Point::new(1.5, 2.5)]);
        assert!(parse_csv("1,a\n").is_err());
        assert!(parse_csv("# nothing\n").is_err());
    }

    #[test]
    fn json_points() {
        let p = parse_json(r#"{"points": [[1, 2], [3.5, -1]]}"#).unwrap();
        assert_eq!(p[1], Point::new(3.5, -1.));
        assert!(parse_json(r#"{"pts": []}"#).is_err());
        assert!(parse_json(r#"{"points": [[1, 2, 3]]}"#).is_err());
    }
}
