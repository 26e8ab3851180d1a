use std::fs;
use std::path::Path;

use crate::chromosome::Individual;
use crate::error::{BrkgaError, Result};
use crate::fmt::sig9;
use crate::mo::ParetoArchive;

use super::trace::RunTrace;

pub(crate) fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| BrkgaError::io(path, e))
}

/// Two lines: the fitness values, then the decoded solution indices.
pub fn best_file_contents(best: &Individual, solution: Option<&[usize]>) -> String {
    let fitness: Vec<String> = best.score().values().iter().map(|v| sig9(*v)).collect();
    let sol: Vec<String> = solution
        .unwrap_or(&[])
        .iter()
        .map(|i| i.to_string())
        .collect();
    format!("{}\n{}\n", fitness.join(" "), sol.join(" "))
}

/// Writes the trace CSV and the best-solution file.
pub fn write_report(
    trace: &RunTrace,
    best: &Individual,
    solution: Option<&[usize]>,
    trace_path: &Path,
    best_path: &Path,
) -> Result<()> {
    write_file(trace_path, &trace.to_csv())?;
    write_file(best_path, &best_file_contents(best, solution))
}

/// Writes the archive, one tab-separated objective vector per line.
pub fn write_pareto(archive: &ParetoArchive, path: &Path) -> Result<()> {
    write_file(path, &archive.to_tsv())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromosome::{Chromosome, Fitness};

    #[test]
    fn best_file_layout() {
        let ind = Individual::decoded(
            Chromosome::new(vec![0.1, 0.2]).unwrap(),
            Fitness::new(vec![12.0, 0.5]).unwrap(),
        );
        assert_eq!(best_file_contents(&ind, Some(&[1, 0])), "12 0.5\n1 0\n");
        assert_eq!(best_file_contents(&ind, None), "12 0.5\n\n");
    }

    #[test]
    fn unwritable_path_is_io() {
        let err = write_file(Path::new("/nonexistent-dir/x/trace.csv"), "x").unwrap_err();
        assert!(err.is_io());
    }
}
