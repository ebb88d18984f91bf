//! Line-oriented text formats for algebra presentations and modules.
//!
//! Algebra files:
//! ```text
//! # comment
//! vertices 3
//! arrow a 2 1
//! arrow b 3 2
//! relation 1*a*b
//! ```
//! Paths are arrow names joined by `*` in composition order (`a*b` = a after
//! b); relation terms are joined by `+` and carry an optional integer
//! coefficient (default 1, negatives allowed).
//!
//! Module files:
//! ```text
//! dims 1 4 2
//! matrix a
//! 0 1 0 0
//! matrix b
//! ...
//! ```
//! One `matrix NAME` block per arrow whose source and target dimensions are
//! both nonzero, rows = target dimension, entries reduced mod p on load.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quiver::{AlgebraPresentation, Arrow, Quiver, Relation, RelationTerm};
use crate::rep::Representation;
use std::sync::Arc;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Strip comments and blank lines, keeping 1-based line numbers.
fn logical_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        })
        .collect()
}

pub fn parse_algebra(text: &str) -> Result<AlgebraPresentation> {
    let lines = logical_lines(text);
    let mut iter = lines.iter();
    let (first_no, first) = *iter
        .next()
        .ok_or_else(|| parse_err(1, "empty file; expected 'vertices N'"))?;
    let n: usize = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["vertices", n] => n
            .parse()
            .map_err(|_| parse_err(first_no, format!("bad vertex count '{n}'")))?,
        _ => {
            return Err(parse_err(
                first_no,
                "expected 'vertices N' on the first line",
            ))
        }
    };

    let mut arrows: Vec<Arrow> = Vec::new();
    let mut relation_lines: Vec<(usize, &str)> = Vec::new();
    for &(no, line) in iter {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("arrow") => {
                let bad = || parse_err(no, "expected 'arrow NAME SRC TGT'");
                let name = words.next().ok_or_else(bad)?.to_string();
                let source: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                let target: usize = words.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if words.next().is_some() {
                    return Err(bad());
                }
                arrows.push(Arrow {
                    name,
                    source,
                    target,
                });
            }
            Some("relation") => {
                let rest = line["relation".len()..].trim();
                if rest.is_empty() {
                    return Err(parse_err(no, "relation has no terms"));
                }
                relation_lines.push((no, rest));
            }
            Some(word) => {
                return Err(parse_err(no, format!("unknown directive '{word}'")));
            }
            None => unreachable!("blank lines are filtered"),
        }
    }

    let quiver = Quiver::new(n, arrows);
    let mut relations = Vec::new();
    for (no, rest) in relation_lines {
        let mut terms = Vec::new();
        for term in rest.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(parse_err(no, "empty relation term"));
            }
            let mut factors = term.split('*').map(str::trim).peekable();
            let mut coeff: i64 = 1;
            if let Some(head) = factors.peek() {
                if let Ok(c) = head.parse::<i64>() {
                    coeff = c;
                    factors.next();
                }
            }
            let mut word = Vec::new();
            for f in factors {
                let idx = quiver
                    .arrow_index(f)
                    .ok_or_else(|| parse_err(no, format!("unknown arrow '{f}'")))?;
                word.push(idx);
            }
            if word.is_empty() {
                return Err(parse_err(
                    no,
                    format!("relation term '{term}' names no arrows"),
                ));
            }
            terms.push(RelationTerm { coeff, word });
        }
        relations.push(Relation { terms });
    }

    let pres = AlgebraPresentation::new(quiver, relations);
    pres.validate()?;
    Ok(pres)
}

pub fn write_algebra(pres: &AlgebraPresentation) -> String {
    let q = &pres.quiver;
    let mut out = format!("vertices {}\n", q.num_vertices);
    for a in &q.arrows {
        out.push_str(&format!("arrow {} {} {}\n", a.name, a.source, a.target));
    }
    for rel in &pres.relations {
        out.push_str(&format!("relation {}\n", rel.display(q)));
    }
    out
}

pub fn parse_module(text: &str, algebra: &Arc<Algebra>) -> Result<Representation> {
    let fp = algebra.fp();
    let n = algebra.num_vertices();
    let quiver = algebra.quiver();
    let lines = logical_lines(text);
    let mut pos = 0;

    let (first_no, first) = *lines
        .first()
        .ok_or_else(|| parse_err(1, "empty file; expected 'dims d1 ... dn'"))?;
    let mut words = first.split_whitespace();
    if words.next() != Some("dims") {
        return Err(parse_err(
            first_no,
            "expected 'dims d1 ... dn' on the first line",
        ));
    }
    let dims: Vec<usize> = words
        .map(|w| {
            w.parse()
                .map_err(|_| parse_err(first_no, format!("bad dimension '{w}'")))
        })
        .collect::<Result<_>>()?;
    if dims.len() != n {
        return Err(parse_err(
            first_no,
            format!("got {} dimensions, algebra has {n} vertices", dims.len()),
        ));
    }
    pos += 1;

    let mut blocks: Vec<Option<Matrix>> = vec![None; quiver.arrows.len()];
    while pos < lines.len() {
        let (no, line) = lines[pos];
        let mut words = line.split_whitespace();
        if words.next() != Some("matrix") {
            return Err(parse_err(no, "expected 'matrix NAME'"));
        }
        let name = words
            .next()
            .ok_or_else(|| parse_err(no, "expected 'matrix NAME'"))?;
        let idx = quiver
            .arrow_index(name)
            .ok_or_else(|| parse_err(no, format!("unknown arrow '{name}'")))?;
        if blocks[idx].is_some() {
            return Err(parse_err(
                no,
                format!("duplicate matrix for arrow '{name}'"),
            ));
        }
        let rows = dims[quiver.arrows[idx].target - 1];
        let cols = dims[quiver.arrows[idx].source - 1];
        if rows == 0 || cols == 0 {
            return Err(parse_err(
                no,
                format!("arrow '{name}' has a zero-dimensional endpoint; omit its matrix"),
            ));
        }
        pos += 1;
        let mut entries = Vec::with_capacity(rows);
        for r in 0..rows {
            let (rno, row_line) = *lines.get(pos).ok_or_else(|| {
                parse_err(no, format!("matrix '{name}' is missing row {}", r + 1))
            })?;
            let row: Vec<_> = row_line
                .split_whitespace()
                .map(|w| {
                    w.parse::<i64>()
                        .map(|c| fp.reduce_i64(c))
                        .map_err(|_| parse_err(rno, format!("bad matrix entry '{w}'")))
                })
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(parse_err(
                    rno,
                    format!(
                        "matrix '{name}' row has {} entries, expected {cols}",
                        row.len()
                    ),
                ));
            }
            entries.push(row);
            pos += 1;
        }
        blocks[idx] = Some(Matrix::from_rows(&entries, cols, fp));
    }

    let arrows: Vec<Matrix> = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let rows = dims[a.target - 1];
            let cols = dims[a.source - 1];
            match blocks[i].take() {
                Some(m) => Ok(m),
                None if rows == 0 || cols == 0 => Ok(Matrix::zeros(rows, cols, fp)),
                None => Err(parse_err(1, format!("missing 'matrix {}' block", a.name))),
            }
        })
        .collect::<Result<_>>()?;

    Representation::new(algebra.clone(), dims, arrows)
}

pub fn write_module(m: &Representation) -> String {
    let mut out = String::from("dims");
    for d in m.dims() {
        out.push_str(&format!(" {d}"));
    }
    out.push('\n');
    for (i, a) in m.algebra().quiver().arrows.iter().enumerate() {
        let mat = m.arrow(i);
        if mat.rows() == 0 || mat.cols() == 0 {
            continue;
        }
        out.push_str(&format!("matrix {}\n", a.name));
        for r in 0..mat.rows() {
            let row: Vec<String> = (0..mat.cols()).map(|c| mat.get(r, c).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
