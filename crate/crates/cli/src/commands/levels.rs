use landau_core::euclidean::{euclid_level, EuclidLevelSpec};
use landau_core::hyperbolic::hyper_levels;

use super::Outcome;
use crate::args::LevelsCmd;
use crate::error::CliError;
use crate::output::{num, Artifact, Table};

pub fn run(cmd: &LevelsCmd) -> Result<Outcome, CliError> {
    let mut t = Table::new(&["n", "energy"]);
    match *cmd {
        LevelsCmd::Euclid { b, nmax } => {
            for n in 0..=nmax {
                t.row(vec![n.to_string(), num(euclid_level(EuclidLevelSpec::new(b, n)?))]);
            }
            t.meta("geometry", "euclidean");
            t.meta("B", num(b));
        }
        LevelsCmd::Hyper { b } => {
            for (n, e) in hyper_levels(b)?.iter().enumerate() {
                t.row(vec![n.to_string(), num(*e)]);
            }
            t.meta("geometry", "hyperbolic");
            t.meta("B", num(b));
        }
    }
    Ok(Outcome::ok(Artifact::Table(t)))
}
