//! Cartesian parameter grids.
//!
//! A grid file lists one config key per line with comma-separated values;
//! every combination is run, the first key varying slowest.
//!
//! ```text
//! rho = 0.6, 0.7, 0.8
//! stall_shake = 50, 100
//! ```

use std::fs;
use std::path::Path;

use crate::error::{BrkgaError, Result};
use crate::fmt::sig9;

use super::config::RunConfig;

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub axes: Vec<(String, Vec<String>)>,
}

impl Grid {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| BrkgaError::io(path, e))?;
        Self::parse(path, &text)
    }

    /// Parses grid text; `path` only labels errors.
    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let mut axes: Vec<(String, Vec<String>)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') || t.starts_with(';') {
                continue;
            }
            let err = |m: &str| BrkgaError::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                message: m.to_string(),
            };
            let (key, values) = t.split_once('=').ok_or_else(|| err("expected `key = v1, v2, ...`"))?;
            let key = key.trim().to_ascii_lowercase();
            let values: Vec<String> = values.split(',').map(|v| v.trim().to_string()).collect();
            if key.is_empty() || values.iter().any(|v| v.is_empty()) {
                return Err(err("empty key or value"));
            }
            if axes.iter().any(|(k, _)| *k == key) {
                return Err(err("duplicate key"));
            }
            axes.push((key, values));
        }
        if axes.is_empty() {
            return Err(BrkgaError::config(format!("{}: grid has no keys", path.display())));
        }
        Ok(Grid { axes })
    }

    pub fn num_cells(&self) -> usize {
        self.axes.iter().map(|(_, v)| v.len()).product()
    }

    /// Settings of every cell in row-major order.
    pub fn cells(&self) -> Vec<Vec<(&str, &str)>> {
        let mut out = vec![Vec::new()];
        for (key, values) in &self.axes {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    values.iter().map(move |v| {
                        let mut cell = prefix.clone();
                        cell.push((key.as_str(), v.as_str()));
                        cell
                    })
                })
                .collect();
        }
        out
    }

    /// Applies every cell to `base`, checking all of them up front.
    pub fn configs(&self, base: &RunConfig) -> Result<Vec<RunConfig>> {
        self.cells()
            .into_iter()
            .map(|cell| {
                let mut run = base.clone();
                for (k, v) in cell {
                    run.set(k, v)?;
                }
                Ok(run)
            })
            .collect()
    }

    pub fn csv_header(&self) -> String {
        let mut cols: Vec<&str> = self.axes.iter().map(|(k, _)| k.as_str()).collect();
        cols.extend(["best", "generations"]);
        cols.join(",")
    }
}

/// One sweep CSV row: the cell's values, final best and generations run.
pub fn csv_row(cell: &[(&str, &str)], best: f64, generations: u64) -> String {
    let mut cols: Vec<String> = cell.iter().map(|(_, v)| v.to_string()).collect();
    cols.push(sig9(best));
    cols.push(generations.to_string());
    cols.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartesian_order() {
        let g = Grid::parse(Path::new("g"), "# grid\nrho = 0.6, 0.8\nSEED = 1,2,3\n").unwrap();
        assert_eq!(g.num_cells(), 6);
        let cells = g.cells();
        assert_eq!(cells[0], vec![("rho", "0.6"), ("seed", "1")]);
        assert_eq!(cells[1], vec![("rho", "0.6"), ("seed", "2")]);
        assert_eq!(cells[5], vec![("rho", "0.8"), ("seed", "3")]);
        assert_eq!(g.csv_header(), "rho,seed,best,generations");
        assert_eq!(csv_row(&cells[0], 2.5, 10), "0.6,1,2.5,10");
    }

    #[test]
    fn bad_lines_named() {
        let err = Grid::parse(Path::new("g"), "rho = 0.6\nbogus\n").unwrap_err();
        assert!(matches!(err, BrkgaError::Parse { line: 2, .. }));
        assert!(Grid::parse(Path::new("g"), "# nothing\n").is_err());
        assert!(Grid::parse(Path::new("g"), "rho = 0.6,\n").is_err());
    }

    #[test]
    fn unknown_key_rejected_before_running() {
        let g = Grid::parse(Path::new("g"), "colour = red\n").unwrap();
        assert!(g.configs(&RunConfig::default()).is_err());
    }
}
