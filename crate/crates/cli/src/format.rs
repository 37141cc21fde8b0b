//! The line-oriented algebra file format.
//!
//! ```text
//! # comment
//! vertices: 5
//! arrows: a1 1 2; a2 3 2; a3 2 4; a4 2 5
//! relations: a1 a3; a2 a4
//! ```
//!
//! Vertices are numbered from 1 in files and from 0 in memory. `arrows:` and
//! `relations:` may each be repeated; entries accumulate.

use std::fmt::Write as _;

use domdim_core::nakayama::{injective_uniserials, projective_uniserials, Uniserial};
use domdim_core::{Arrow, Error as AlgebraError, MonomialAlgebra, Quiver};

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Algebra {
        line: usize,
        #[source]
        source: AlgebraError,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_vertex(token: &str, count: usize, line: usize) -> Result<usize, ParseError> {
    let v: usize = token
        .parse()
        .map_err(|_| syntax(line, format!("`{token}` is not a vertex number")))?;
    if v == 0 || v > count {
        return Err(syntax(line, format!("vertex {v} is outside 1..={count}")));
    }
    Ok(v - 1)
}

pub fn parse_algebra(text: &str) -> Result<MonomialAlgebra, ParseError> {
    let mut vertices: Option<(usize, usize)> = None;
    let mut arrow_lines: Vec<(usize, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `key: value`"))?;
        match key.trim() {
            "vertices" => {
                if vertices.is_some() {
                    return Err(syntax(line, "`vertices` given twice"));
                }
                let n = value
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line, format!("`{}` is not a vertex count", value.trim())))?;
                vertices = Some((n, line));
            }
            "arrows" => arrow_lines.push((line, value.to_string())),
            "relations" => relation_lines.push((line, value.to_string())),
            other => return Err(syntax(line, format!("unknown key `{other}`"))),
        }
    }
    let (n, n_line) = vertices.ok_or_else(|| syntax(0, "missing `vertices:` line"))?;
    if n == 0 {
        return Err(syntax(n_line, "an algebra needs at least one vertex"));
    }

    let mut arrows = Vec::new();
    for (line, value) in &arrow_lines {
        for entry in value.split(';').map(str::trim).filter(|e| !e.is_empty()) {
            let parts: Vec<&str> = entry.split_whitespace().collect();
            let [name, s, t] = parts[..] else {
                return Err(syntax(
                    *line,
                    format!("arrow `{entry}` should read `name source target`"),
                ));
            };
            if arrows.iter().any(|a: &Arrow| a.name == name) {
                return Err(syntax(*line, format!("arrow `{name}` declared twice")));
            }
            arrows.push(Arrow {
                name: name.to_string(),
                source: parse_vertex(s, n, *line)?,
                target: parse_vertex(t, n, *line)?,
            });
        }
    }
    let quiver = Quiver::new(n, arrows).map_err(|source| ParseError::Algebra { line: n_line, source })?;
    if !quiver.is_connected() {
        return Err(ParseError::Algebra {
            line: n_line,
            source: AlgebraError::DisconnectedQuiver,
        });
    }

    let mut words = Vec::new();
    for (line, value) in &relation_lines {
        for entry in value.split(';').map(str::trim).filter(|e| !e.is_empty()) {
            let word = entry
                .split_whitespace()
                .map(|name| {
                    quiver
                        .arrow_id(name)
                        .ok_or_else(|| syntax(*line, format!("unknown arrow `{name}` in relation `{entry}`")))
                })
                .collect::<Result<Vec<usize>, _>>()?;
            if word.len() < 2 || quiver.path(&word).is_none() {
                return Err(ParseError::Algebra {
                    line: *line,
                    source: AlgebraError::BadRelation(format!("`{entry}` is not a path of length at least 2")),
                });
            }
            words.push(word);
        }
    }
    let relations_line = relation_lines.first().map_or(n_line, |(l, _)| *l);
    MonomialAlgebra::from_words(quiver, &words).map_err(|source| ParseError::Algebra {
        line: relations_line,
        source,
    })
}

/// Writes an algebra in the file format; `parse_algebra` reads it back.
pub fn render_algebra(a: &MonomialAlgebra) -> String {
    let q = a.quiver();
    let mut out = String::new();
    writeln!(out, "vertices: {}", q.vertex_count()).unwrap();
    if !q.arrows().is_empty() {
        let arrows: Vec<String> = q
            .arrows()
            .iter()
            .map(|x| format!("{} {} {}", x.name, x.source + 1, x.target + 1))
            .collect();
        writeln!(out, "arrows: {}", arrows.join("; ")).unwrap();
    }
    if !a.relations().is_empty() {
        let rels: Vec<String> = a
            .relations()
            .iter()
            .map(|r| {
                r.arrows
                    .iter()
                    .map(|&x| q.arrow(x).name.as_str())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        writeln!(out, "relations: {}", rels.join("; ")).unwrap();
    }
    out
}

/// Single-line form used in reports.
pub fn render_inline(a: &MonomialAlgebra) -> String {
    render_algebra(a).trim_end().replace('\n', " | ")
}

/// Reads a summand list over a Nakayama algebra `b`: tokens `P<i>`, `I<i>`,
/// `I<i>/s` and `top=<v>,len=<l>`, 1-based, separated by spaces or `+`.
pub fn parse_summands(spec: &str, b: &MonomialAlgebra) -> Result<Vec<Uniserial>, String> {
    let n = b.vertex_count();
    let vertex = |digits: &str, token: &str| -> Result<usize, String> {
        match digits.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(format!("`{token}`: vertex must be in 1..={n}")),
        }
    };
    let projectives = projective_uniserials(b);
    let injectives = injective_uniserials(b);
    let mut out = Vec::new();
    for token in spec
        .split(|c: char| c.is_whitespace() || c == '+')
        .filter(|t| !t.is_empty())
    {
        let u = if let Some(rest) = token.strip_prefix("top=") {
            let (top, len) = rest
                .split_once(",len=")
                .ok_or_else(|| format!("`{token}` should read `top=<v>,len=<l>`"))?;
            let top = vertex(top, token)?;
            let len: usize = len.parse().map_err(|_| format!("`{token}`: bad length"))?;
            if len == 0 || len > projectives[top].len {
                return Err(format!("`{token}`: length must be in 1..={}", projectives[top].len));
            }
            Uniserial { top, len }
        } else if let Some(rest) = token.strip_prefix('P') {
            projectives[vertex(rest, token)?]
        } else if let Some(rest) = token.strip_prefix('I') {
            match rest.strip_suffix("/s") {
                Some(v) => {
                    let i = injectives[vertex(v, token)?];
                    if i.len == 1 {
                        return Err(format!("`{token}` is the zero module"));
                    }
                    Uniserial {
                        top: i.top,
                        len: i.len - 1,
                    }
                }
                None => injectives[vertex(rest, token)?],
            }
        } else {
            return Err(format!("unknown summand `{token}`"));
        };
        out.push(u);
    }
    if out.is_empty() {
        return Err("no summands given".to_string());
    }
    Ok(out)
}

pub const EXAMPLE_FILE: &str = "\
# Five vertices; dominant dimension one; not Nakayama.
vertices: 5
arrows: a1 1 2; a2 3 2; a3 2 4; a4 2 5
relations: a1 a3; a2 a4
";

#[cfg(test)]
mod tests {
    use super::*;
    use domdim_core::fixtures;

    #[test]
    fn five_vertex_example_parses() {
        let a = parse_algebra(EXAMPLE_FILE).unwrap();
        assert_eq!(a.quiver().vertex_count(), 5);
        assert_eq!(a.quiver().arrows().len(), 4);
        assert_eq!(a.relations().len(), 2);
        assert_eq!(a.relation_words(), fixtures::paper_example().relation_words());
        assert_eq!(a.dim(), 11);
    }

    #[test]
    fn field_alone() {
        let a = parse_algebra("vertices: 1").unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn unknown_arrow() {
        let err = parse_algebra("vertices: 2\narrows: a 1 2\nrelations: a b\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn algebra_errors_carry_lines() {
        let err = parse_algebra("vertices: 1\narrows: x 1 1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Algebra {
                line: 1,
                source: AlgebraError::NotAdmissible
            }
        );
        let err = parse_algebra("vertices: 2\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Algebra {
                source: AlgebraError::DisconnectedQuiver,
                ..
            }
        ));
        let err = parse_algebra("vertices: 2\narrows: a 1 2\nrelations: a\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Algebra {
                line: 3,
                source: AlgebraError::BadRelation(_)
            }
        ));
        assert!(parse_algebra("vertices: 2\narrows: a 1 3\n").is_err());
        assert!(parse_algebra("colour: red\n").is_err());
    }

    #[test]
    fn summand_tokens() {
        let b = fixtures::dual_numbers();
        let m = parse_summands("P1 + I1/s", &b).unwrap();
        assert_eq!(m, vec![Uniserial { top: 0, len: 2 }, Uniserial { top: 0, len: 1 }]);
        assert_eq!(parse_summands("top=1,len=1 I1", &b).unwrap().len(), 2);
        assert!(parse_summands("P2", &b).is_err());
        assert!(parse_summands("top=1,len=3", &b).is_err());
        assert!(parse_summands("Q1", &b).is_err());
        assert!(parse_summands("", &b).is_err());
    }

    #[test]
    fn roundtrip() {
        for a in [fixtures::paper_example(), fixtures::dual_numbers(), fixtures::line(3)] {
            let b = parse_algebra(&render_algebra(&a)).unwrap();
            assert_eq!(b.relation_words(), a.relation_words());
            assert_eq!(b.quiver(), a.quiver());
        }
    }
}
