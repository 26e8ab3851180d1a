//! Plain-text instance files.
//!
//! Whitespace-delimited UTF-8; blank lines and lines starting with `#` are
//! ignored.
//!
//! ```text
//! # TSP, explicit matrix          # TSP, planar coordinates
//! 3                               3
//! MATRIX                          COORDS
//! 0 2 9                           0 0
//! 2 0 6                           3 4
//! 9 6 0                           6 0
//!
//! # knapsack: n cap, then weight value [value ...]
//! 3 5
//! 2 3
//! 3 4
//! 4 5
//!
//! # single-machine tardiness: n, then ptime due
//! 2
//! 2 10
//! 3 1
//! ```

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::chromosome::{Fitness, Sense};
use crate::decoder::Decoder;
use crate::decoders::{
    KnapsackDecoder, KnapsackInstance, SmttDecoder, SmttInstance, TspDecoder, TspInstance,
};
use crate::error::{BrkgaError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    Tsp,
    Knapsack,
    Smtt,
}

impl FromStr for ProblemKind {
    type Err = BrkgaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "tsp" => Ok(ProblemKind::Tsp),
            "knapsack" => Ok(ProblemKind::Knapsack),
            "smtt" => Ok(ProblemKind::Smtt),
            other => Err(BrkgaError::config(format!("unknown problem kind `{other}`"))),
        }
    }
}

/// A parsed instance.
#[derive(Debug, Clone, PartialEq)]
pub enum Instance {
    Tsp(TspInstance),
    Knapsack(KnapsackInstance),
    Smtt(SmttInstance),
}

/// A decoder over any of the reference problems.
#[derive(Debug, Clone)]
pub enum Problem {
    Tsp(TspDecoder),
    Knapsack(KnapsackDecoder),
    Smtt(SmttDecoder),
}

impl Problem {
    /// Wraps `instance`. With `multi_objective`, knapsack keeps every value
    /// column and tardiness adds maximum tardiness as a second objective;
    /// otherwise only the first objective is optimized.
    pub fn new(instance: Instance, multi_objective: bool) -> Result<Self> {
        Ok(match instance {
            Instance::Tsp(t) => {
                if multi_objective {
                    return Err(BrkgaError::config(
                        "the TSP decoder is single-objective",
                    ));
                }
                Problem::Tsp(TspDecoder::new(t))
            }
            Instance::Knapsack(mut k) => {
                if multi_objective && k.num_objectives() < 2 {
                    return Err(BrkgaError::config(
                        "multi-objective knapsack needs at least two value columns",
                    ));
                }
                if !multi_objective {
                    k.values.truncate(1);
                }
                Problem::Knapsack(KnapsackDecoder::new(k))
            }
            Instance::Smtt(s) => {
                if multi_objective {
                    Problem::Smtt(SmttDecoder::bi_objective(s))
                } else {
                    Problem::Smtt(SmttDecoder::new(s))
                }
            }
        })
    }

    fn inner(&self) -> &dyn Decoder {
        match self {
            Problem::Tsp(d) => d,
            Problem::Knapsack(d) => d,
            Problem::Smtt(d) => d,
        }
    }
}

impl Decoder for Problem {
    fn num_genes(&self) -> usize {
        self.inner().num_genes()
    }

    fn senses(&self) -> &[Sense] {
        self.inner().senses()
    }

    fn decode(&self, keys: &[f64]) -> Result<Fitness> {
        self.inner().decode(keys)
    }

    fn describe(&self, keys: &[f64]) -> Option<Vec<usize>> {
        self.inner().describe(keys)
    }
}

/// Non-comment lines with their 1-based line numbers.
struct Lines<'a> {
    path: &'a Path,
    rows: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(path: &'a Path, text: &'a str) -> Self {
        let rows = text
            .lines()
            .enumerate()
            .filter_map(|(i, l)| {
                let t = l.trim();
                (!t.is_empty() && !t.starts_with('#'))
                    .then(|| (i + 1, t.split_whitespace().collect()))
            })
            .collect();
        Lines { path, rows, pos: 0 }
    }

    fn error(&self, line: usize, message: impl Into<String>) -> BrkgaError {
        BrkgaError::Parse {
            path: self.path.to_path_buf(),
            line,
            message: message.into(),
        }
    }

    /// Line number to report when input ends early.
    fn end_line(&self) -> usize {
        self.rows.last().map_or(1, |(l, _)| l + 1)
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let row = self
            .rows
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.error(self.end_line(), format!("expected {what}, found end of file")))?;
        self.pos += 1;
        Ok(row)
    }

    fn numbers<T: FromStr>(&mut self, what: &str, count: Option<usize>) -> Result<(usize, Vec<T>)> {
        let (line, fields) = self.next(what)?;
        if let Some(c) = count {
            if fields.len() != c {
                return Err(self.error(
                    line,
                    format!("expected {c} fields for {what}, found {}", fields.len()),
                ));
            }
        }
        let vals = fields
            .iter()
            .map(|f| {
                f.parse::<T>()
                    .map_err(|_| self.error(line, format!("cannot parse `{f}` in {what}")))
            })
            .collect::<Result<Vec<T>>>()?;
        Ok((line, vals))
    }

    fn finish(&self) -> Result<()> {
        if let Some((line, _)) = self.rows.get(self.pos) {
            return Err(self.error(*line, "unexpected extra line"));
        }
        Ok(())
    }
}

/// Reads and validates an instance file.
pub fn parse_instance(path: &Path, kind: ProblemKind) -> Result<Instance> {
    let text = fs::read_to_string(path).map_err(|e| BrkgaError::io(path, e))?;
    parse_instance_str(path, &text, kind)
}

/// Parses instance text; `path` is only used in error messages.
pub fn parse_instance_str(path: &Path, text: &str, kind: ProblemKind) -> Result<Instance> {
    let mut lines = Lines::new(path, text);
    let validation = |line: usize, e: BrkgaError| BrkgaError::Parse {
        path: PathBuf::from(path),
        line,
        message: e.to_string(),
    };
    let inst = match kind {
        ProblemKind::Tsp => {
            let (l0, n) = lines.numbers::<usize>("city count", Some(1))?;
            let n = n[0];
            if n == 0 {
                return Err(lines.error(l0, "city count must be positive"));
            }
            let (lm, mode) = lines.next("MATRIX or COORDS")?;
            match mode.as_slice() {
                [m] if m.eq_ignore_ascii_case("matrix") => {
                    let rows = (0..n)
                        .map(|_| lines.numbers::<f64>("matrix row", Some(n)).map(|(_, r)| r))
                        .collect::<Result<Vec<_>>>()?;
                    lines.finish()?;
                    Instance::Tsp(TspInstance::from_matrix(rows).map_err(|e| validation(lm, e))?)
                }
                [m] if m.eq_ignore_ascii_case("coords") => {
                    let pts = (0..n)
                        .map(|_| {
                            lines
                                .numbers::<f64>("coordinate pair", Some(2))
                                .map(|(_, r)| (r[0], r[1]))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    lines.finish()?;
                    Instance::Tsp(TspInstance::from_coords(&pts).map_err(|e| validation(lm, e))?)
                }
                _ => return Err(lines.error(lm, "expected MATRIX or COORDS")),
            }
        }
        ProblemKind::Knapsack => {
            let (l0, head) = lines.numbers::<u64>("item count and capacity", Some(2))?;
            let (n, cap) = (head[0] as usize, head[1]);
            let mut weights = Vec::with_capacity(n);
            let mut values: Vec<Vec<u64>> = Vec::new();
            for _ in 0..n {
                let (l, row) = lines.numbers::<u64>("item row", None)?;
                if row.len() < 2 || (!values.is_empty() && row.len() - 1 != values.len()) {
                    return Err(lines.error(l, "item rows need `weight value [value ...]` with a consistent column count"));
                }
                if values.is_empty() {
                    values = vec![Vec::with_capacity(n); row.len() - 1];
                }
                weights.push(row[0]);
                for (col, v) in values.iter_mut().zip(&row[1..]) {
                    col.push(*v);
                }
            }
            lines.finish()?;
            Instance::Knapsack(
                KnapsackInstance::multi(weights, values, cap).map_err(|e| validation(l0, e))?,
            )
        }
        ProblemKind::Smtt => {
            let (l0, n) = lines.numbers::<usize>("job count", Some(1))?;
            let mut p = Vec::new();
            let mut d = Vec::new();
            for _ in 0..n[0] {
                let (_, row) = lines.numbers::<f64>("job row", Some(2))?;
                p.push(row[0]);
                d.push(row[1]);
            }
            lines.finish()?;
            Instance::Smtt(SmttInstance::new(p, d).map_err(|e| validation(l0, e))?)
        }
    };
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str, kind: ProblemKind) -> Result<Instance> {
        parse_instance_str(Path::new("test.txt"), text, kind)
    }

    #[test]
    fn matrix_file() {
        let inst = parse("# tiny\n3\nMATRIX\n0 1 2\n1 0 3\n2 3 0\n", ProblemKind::Tsp).unwrap();
        match inst {
            Instance::Tsp(t) => {
                assert_eq!(t.len(), 3);
                assert_eq!(t.distance(1, 2), 3.0);
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn coords_file() {
        let inst = parse("2\nCOORDS\n0 0\n3 4\n", ProblemKind::Tsp).unwrap();
        match inst {
            Instance::Tsp(t) => assert_eq!(t.distance(0, 1), 5.0),
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn short_file_names_line() {
        let err = parse("3\nMATRIX\n0 1 2\n1 0 3\n", ProblemKind::Tsp).unwrap_err();
        assert!(matches!(err, BrkgaError::Parse { line: 5, .. }), "{err}");
        let err = parse("3\nMATRIX\n0 1 2\n1 0\n2 3 0\n", ProblemKind::Tsp).unwrap_err();
        assert!(matches!(err, BrkgaError::Parse { line: 4, .. }), "{err}");
    }

    #[test]
    fn asymmetric_matrix_rejected() {
        let err = parse("2\nMATRIX\n0 1\n2 0\n", ProblemKind::Tsp).unwrap_err();
        assert!(err.to_string().contains("symmetric"));
    }

    #[test]
    fn knapsack_columns() {
        match parse("3 5\n2 3\n3 4\n4 5\n", ProblemKind::Knapsack).unwrap() {
            Instance::Knapsack(k) => {
                assert_eq!(k.weights, vec![2, 3, 4]);
                assert_eq!(k.values, vec![vec![3, 4, 5]]);
                assert_eq!(k.capacity, 5);
            }
            _ => panic!("wrong kind"),
        }
        match parse("2 5\n2 3 1\n3 4 2\n", ProblemKind::Knapsack).unwrap() {
            Instance::Knapsack(k) => assert_eq!(k.num_objectives(), 2),
            _ => panic!("wrong kind"),
        }
        assert!(parse("2 5\n2 3 1\n3 4\n", ProblemKind::Knapsack).is_err());
        assert!(parse("2 5\n2 x\n3 4\n", ProblemKind::Knapsack).is_err());
    }

    #[test]
    fn smtt_file() {
        match parse("2\n2 10\n3 1\n", ProblemKind::Smtt).unwrap() {
            Instance::Smtt(s) => assert_eq!(s.due, vec![10.0, 1.0]),
            _ => panic!("wrong kind"),
        }
        let err = parse("2\n2 10\n3 1\n4 4\n", ProblemKind::Smtt).unwrap_err();
        assert!(matches!(err, BrkgaError::Parse { line: 4, .. }));
    }

    #[test]
    fn kinds_parse_case_insensitively() {
        assert_eq!("TSP".parse::<ProblemKind>().unwrap(), ProblemKind::Tsp);
        assert!("vrp".parse::<ProblemKind>().is_err());
    }
}
