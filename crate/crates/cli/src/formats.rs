//! The three text formats: ideal files, graph/clutter files, and the
//! matrix-block interchange format for Hilbert-basis runs. Parsing either
//! succeeds completely or fails with a line/column diagnostic, and
//! `parse(serialize(x)) == x` on all three.

use std::fmt;

use nmi_core::{Clutter, Exponent, Graph, MonomialIdeal};

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Lines that carry content: trailing `#` comments and blanks are skipped.
fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            None
        } else {
            Some((i + 1, trimmed))
        }
    })
}

fn parse_header(line: &str, lineno: usize, keyword: &str) -> Result<usize, ParseError> {
    let mut parts = line.split_whitespace();
    match parts.next() {
        Some(k) if k == keyword => {}
        Some(other) => {
            return Err(ParseError::new(
                lineno,
                1,
                format!("expected `{keyword} <count>`, found `{other}`"),
            ))
        }
        None => return Err(ParseError::new(lineno, 1, "empty header")),
    }
    let count = parts
        .next()
        .ok_or_else(|| ParseError::new(lineno, keyword.len() + 1, "missing count"))?;
    if parts.next().is_some() {
        return Err(ParseError::new(lineno, 1, "trailing tokens after header"));
    }
    count
        .parse::<usize>()
        .map_err(|_| ParseError::new(lineno, keyword.len() + 2, format!("bad count `{count}`")))
}

/// Parse a monomial like `t1^2*t3`, or `1` for the unit monomial.
fn parse_monomial(line: &str, lineno: usize, num_vars: usize) -> Result<Exponent, ParseError> {
    let mut exp = vec![0u64; num_vars];
    if line == "1" {
        return Ok(exp);
    }
    let mut col = 1;
    for factor in line.split('*') {
        let factor = factor.trim();
        let Some(rest) = factor.strip_prefix('t') else {
            return Err(ParseError::new(
                lineno,
                col,
                format!("expected `t<index>`, found `{factor}`"),
            ));
        };
        let (idx_str, pow) = match rest.split_once('^') {
            Some((i, p)) => (
                i,
                p.parse::<u64>()
                    .map_err(|_| ParseError::new(lineno, col, format!("bad exponent `{p}`")))?,
            ),
            None => (rest, 1),
        };
        let idx: usize = idx_str
            .parse()
            .map_err(|_| ParseError::new(lineno, col, format!("bad variable index `{idx_str}`")))?;
        if idx == 0 || idx > num_vars {
            return Err(ParseError::new(
                lineno,
                col,
                format!("variable t{idx} out of range 1..{num_vars}"),
            ));
        }
        exp[idx - 1] += pow;
        col += factor.len() + 1;
    }
    Ok(exp)
}

/// Render an exponent vector as a monomial string.
pub fn format_monomial(exp: &[u64]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exp.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("t{}", i + 1)),
            _ => parts.push(format!("t{}^{e}", i + 1)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn parse_ideal(input: &str) -> Result<MonomialIdeal, ParseError> {
    let mut lines = content_lines(input);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty ideal file"))?;
    let num_vars = parse_header(header, lineno, "vars")?;
    let mut gens: Vec<Exponent> = Vec::new();
    for (lineno, line) in lines {
        if line.starts_with('t') || line == "1" {
            gens.push(parse_monomial(line, lineno, num_vars)?);
            continue;
        }
        let nums: Result<Vec<u64>, _> = line.split_whitespace().map(str::parse).collect();
        match nums {
            Ok(v) if v.len() == num_vars => gens.push(v),
            Ok(v) => {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("expected {num_vars} exponents, found {}", v.len()),
                ))
            }
            Err(_) => {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("expected exponents or a monomial, found `{line}`"),
                ))
            }
        }
    }
    MonomialIdeal::new(num_vars, gens)
        .map_err(|e| ParseError::new(1, 1, format!("invalid ideal: {e}")))
}

pub fn serialize_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars {}\n", ideal.num_vars());
    for g in ideal.gens() {
        let line: Vec<String> = g.iter().map(|e| e.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// A parsed graph/clutter file: the clutter plus whether every edge had
/// exactly two vertices.
#[derive(Debug)]
pub struct GraphFile {
    pub clutter: Clutter,
    pub is_graph: bool,
}

impl GraphFile {
    pub fn graph(&self) -> Result<Graph, ParseError> {
        if !self.is_graph {
            return Err(ParseError::new(
                1,
                1,
                "this command needs a graph: every edge must have exactly two vertices",
            ));
        }
        let edges: Vec<(usize, usize)> =
            self.clutter.edges().iter().map(|e| (e[0], e[1])).collect();
        Graph::new(self.clutter.num_vertices(), edges)
            .map_err(|e| ParseError::new(1, 1, format!("invalid graph: {e}")))
    }
}

pub fn parse_graph_file(input: &str) -> Result<GraphFile, ParseError> {
    let mut lines = content_lines(input);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty graph file"))?;
    let n = parse_header(header, lineno, "vertices")?;
    let mut edges: Vec<(usize, Vec<usize>)> = Vec::new();
    let mut is_graph = true;
    for (lineno, line) in lines {
        let nums: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let vs = nums.map_err(|_| {
            ParseError::new(
                lineno,
                1,
                format!("expected vertex numbers, found `{line}`"),
            )
        })?;
        if vs.is_empty() {
            continue;
        }
        for &v in &vs {
            if v == 0 || v > n {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("vertex {v} out of range 1..{n}"),
                ));
            }
        }
        let mut edge: Vec<usize> = vs.iter().map(|&v| v - 1).collect();
        edge.sort_unstable();
        let before = edge.len();
        edge.dedup();
        if edge.len() != before {
            return Err(ParseError::new(lineno, 1, "repeated vertex in edge"));
        }
        if edge.len() != 2 {
            is_graph = false;
        }
        edges.push((lineno, edge));
    }
    // Antichain check with line diagnostics.
    for (i, (lineno, e)) in edges.iter().enumerate() {
        for (j, (_, f)) in edges.iter().enumerate() {
            if i != j && e.iter().all(|v| f.contains(v)) {
                return Err(ParseError::new(
                    *lineno,
                    1,
                    format!(
                        "edges must form an antichain: {:?} is contained in {:?}",
                        e.iter().map(|v| v + 1).collect::<Vec<_>>(),
                        f.iter().map(|v| v + 1).collect::<Vec<_>>()
                    ),
                ));
            }
        }
    }
    let clutter = Clutter::new(n, edges.into_iter().map(|(_, e)| e))
        .map_err(|e| ParseError::new(1, 1, format!("invalid clutter: {e}")))?;
    Ok(GraphFile { clutter, is_graph })
}

pub fn serialize_clutter(clutter: &Clutter) -> String {
    let mut out = format!("vertices {}\n", clutter.num_vertices());
    for e in clutter.edges() {
        let line: Vec<String> = e.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixMode {
    /// Rows generate a cone; compute its Hilbert basis.
    Normalization,
    /// Rows are ideal generators; work on the Rees cone.
    ReesAlgebra,
}

#[derive(Debug)]
pub struct MatrixBlock {
    pub mode: MatrixMode,
    pub rows: Vec<Vec<i64>>,
}

pub fn parse_matrix_block(input: &str) -> Result<MatrixBlock, ParseError> {
    let mut lines = content_lines(input).peekable();
    let (lineno, first) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty matrix block"))?;
    // Optional ambient-space directive.
    let (amb, mode_line) = if first.starts_with("amb_space") {
        let d = parse_header(first, lineno, "amb_space")?;
        let next = lines
            .next()
            .ok_or_else(|| ParseError::new(lineno, 1, "missing mode line after amb_space"))?;
        (Some(d), next)
    } else {
        (None, (lineno, first))
    };
    let (mode_lineno, mode_str) = mode_line;
    let (mode, count) = if mode_str.starts_with("normalization") {
        (
            MatrixMode::Normalization,
            parse_header(mode_str, mode_lineno, "normalization")?,
        )
    } else if mode_str.starts_with("rees_algebra") {
        (
            MatrixMode::ReesAlgebra,
            parse_header(mode_str, mode_lineno, "rees_algebra")?,
        )
    } else {
        let directive = mode_str.split_whitespace().next().unwrap_or("");
        return Err(ParseError::new(
            mode_lineno,
            1,
            format!(
                "unsupported directive `{directive}`: only `normalization` and `rees_algebra` \
                 blocks are handled"
            ),
        ));
    };
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(count);
    let mut arity: Option<usize> = None;
    for (lineno, line) in lines {
        let nums: Result<Vec<i64>, _> = line.split_whitespace().map(str::parse).collect();
        let row = nums.map_err(|_| {
            ParseError::new(lineno, 1, format!("expected integer row, found `{line}`"))
        })?;
        if let Some(a) = arity {
            if row.len() != a {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("row has {} entries, previous rows have {a}", row.len()),
                ));
            }
        } else {
            arity = Some(row.len());
        }
        rows.push(row);
    }
    if rows.len() != count {
        return Err(ParseError::new(
            mode_lineno,
            1,
            format!("mode line announces {count} rows, found {}", rows.len()),
        ));
    }
    if let (Some(amb), Some(arity)) = (amb, arity) {
        let expected = match mode {
            MatrixMode::Normalization => arity,
            MatrixMode::ReesAlgebra => arity + 1,
        };
        if amb != expected {
            return Err(ParseError::new(
                mode_lineno,
                1,
                format!("amb_space {amb} does not match rows (expected {expected})"),
            ));
        }
    }
    Ok(MatrixBlock { mode, rows })
}

pub fn serialize_matrix_block(block: &MatrixBlock) -> String {
    let arity = block.rows.first().map_or(0, |r| r.len());
    let (keyword, amb) = match block.mode {
        MatrixMode::Normalization => ("normalization", arity),
        MatrixMode::ReesAlgebra => ("rees_algebra", arity + 1),
    };
    let mut out = format!("amb_space {amb}\n{keyword} {}\n", block.rows.len());
    for row in &block.rows {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
