use landau_core::hyperbolic::{default_grid, HyperLevelSpec, Prop1Checker, Prop1Config, RadialFunction, UpperHalfPoint};

use super::{parse_range, Outcome};
use crate::args::{HyperCmd, Prop1Args};
use crate::config::RunConfig;
use crate::error::{CliError, EXIT_CHECK_FAILED};
use crate::output::{num, Artifact, Table};

pub fn run(cmd: &HyperCmd, cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cmd {
        HyperCmd::Prop1(args) => prop1(args, cfg),
    }
}

fn grid(s: &str) -> Result<Vec<UpperHalfPoint>, CliError> {
    if s == "default" {
        return Ok(default_grid());
    }
    let Some((xs, ys)) = s.split_once(',') else {
        return Err(CliError::usage(format!("expected default or x0:x1:nx,y0:y1:ny, got {s:?}")));
    };
    let (xs, ys) = (parse_range(xs)?, parse_range(ys)?);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for &y in &ys {
        for &x in &xs {
            out.push(UpperHalfPoint::new(x, y).map_err(|e| CliError::usage(e.to_string()))?);
        }
    }
    Ok(out)
}

fn function(s: &str, spec: HyperLevelSpec) -> Result<RadialFunction, CliError> {
    if s == "reference" {
        return Ok(RadialFunction::reference_state(spec));
    }
    let bad = || CliError::usage(format!("expected reference or p,rate, got {s:?}"));
    let (p, r) = s.split_once(',').ok_or_else(bad)?;
    let p: f64 = p.trim().parse().map_err(|_| bad())?;
    let r: f64 = r.trim().parse().map_err(|_| bad())?;
    Ok(RadialFunction::exp_monomial(p, r)?)
}

fn prop1(a: &Prop1Args, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let spec = HyperLevelSpec::new(a.b, a.n)?;
    let config = Prop1Config {
        tolerance: a.tolerance.unwrap_or(cfg.tolerance("prop1")),
        derivative_tolerance: cfg.tolerance("prop1_derivative"),
        nodes: cfg.quadrature_nodes,
        ..Prop1Config::default()
    };
    let points = grid(&a.grid)?;
    let checker = Prop1Checker::new(spec, function(&a.function, spec)?, config)?;
    let mut t = Table::new(&["x", "y", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "rel_err", "passed"]);
    let mut all = true;
    for p in points {
        let c = checker.check(p)?;
        all &= c.passed;
        t.row(vec![
            num(c.x),
            num(c.y),
            num(c.lhs.re),
            num(c.lhs.im),
            num(c.rhs.re),
            num(c.rhs.im),
            num(c.rel_err),
            c.passed.to_string(),
        ]);
    }
    t.meta("B", num(a.b));
    t.meta("n", a.n);
    t.meta("function", &a.function);
    t.meta("nodes", config.nodes);
    t.meta("tolerance", num(config.tolerance));
    t.meta("derivative_tolerance", num(config.derivative_tolerance));
    Ok(Outcome { artifact: Artifact::Table(t), code: if all { 0 } else { EXIT_CHECK_FAILED } })
}
