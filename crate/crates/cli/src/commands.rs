use serde_json::{json, Value};
use vertex_coupling::band_scan::{build_diagram, default_resolution, uniform_t_grid, DiagramRow};
use vertex_coupling::coupling::coupling_matrix;
use vertex_coupling::scattering::{high_energy_limit, s_matrix_circulant};
use vertex_coupling::star::{negative_eigenvalues, secular_determinant};
use vertex_coupling::{CouplingParams, EnergyWindow, Error, LatticeFamily, Result, SpectralDiagram, C};

use crate::output::{fmt_num, num, Table};

/// A command result in both output formats.
pub struct Report {
    pub table: Table,
    pub json: Value,
}

fn complex_json(z: &C<f64>) -> Value {
    json!([num(z.re), num(z.im)])
}

pub fn coupling(p: &CouplingParams) -> Result<Report> {
    let u = coupling_matrix(p)?;
    let residual = u.matrix().unitarity_residual();
    let sym = u.symmetry(1e-10)?;
    let mut table = Table::new(&["quantity", "index", "re", "im"]);
    for (name, values) in [("generator", u.generator().entries()), ("eigenvalue", u.eigenvalues().values())] {
        for (i, z) in values.iter().enumerate() {
            table.push(vec![name.into(), i.to_string(), fmt_num(z.re), fmt_num(z.im)]);
        }
    }
    table.push(vec!["unitarity_residual".into(), String::new(), fmt_num(residual), String::new()]);
    for (name, flag) in [
        ("mirror_symmetric", sym.mirror_symmetric),
        ("time_reversal", sym.time_reversal),
        ("permutation_invariant", sym.permutation_invariant),
    ] {
        table.push(vec![name.into(), String::new(), u8::from(flag).to_string(), String::new()]);
    }
    let json = json!({
        "params": {"n": p.n, "alpha": num(p.alpha), "t": num(p.t)},
        "generator": u.generator().entries().iter().map(complex_json).collect::<Vec<_>>(),
        "eigenvalues": u.eigenvalues().values().iter().map(complex_json).collect::<Vec<_>>(),
        "unitarity_residual": num(residual),
        "symmetry": {
            "mirror_symmetric": sym.mirror_symmetric,
            "time_reversal": sym.time_reversal,
            "permutation_invariant": sym.permutation_invariant,
        },
    });
    Ok(Report { table, json })
}

pub fn star(p: &CouplingParams) -> Result<Report> {
    let u = coupling_matrix(p)?;
    let spectrum = negative_eigenvalues(p);
    let mut table = Table::new(&["energy", "kappa", "branches", "multiplicity", "det_residual"]);
    let mut levels = Vec::new();
    for e in &spectrum.eigenvalues {
        let residual = secular_determinant(e.kappa, &u).norm() / (1.0 + e.kappa).powi(p.n as i32);
        let labels: Vec<String> = e.branches.iter().map(|b| b.label()).collect();
        table.push(vec![
            fmt_num(e.energy),
            fmt_num(e.kappa),
            labels.join(";"),
            e.multiplicity().to_string(),
            fmt_num(residual),
        ]);
        levels.push(json!({
            "energy": num(e.energy),
            "kappa": num(e.kappa),
            "branches": labels,
            "multiplicity": e.multiplicity(),
            "det_residual": num(residual),
        }));
    }
    let json = json!({
        "params": {"n": p.n, "alpha": num(p.alpha), "t": num(p.t)},
        "eigenvalues": levels,
    });
    Ok(Report { table, json })
}

pub fn smatrix(p: &CouplingParams, ks: &[f64], limit: bool) -> Result<Report> {
    if let Some(k) = ks.iter().find(|k| !(**k > 0.0 && k.is_finite())) {
        return Err(Error::InvalidParameter {
            name: "k",
            reason: format!("momenta must be positive and finite, got {k}"),
        });
    }
    let u = coupling_matrix(p)?;
    let mut table = Table::new(&["k", "index", "re", "im", "unitarity_residual"]);
    let mut entries = Vec::new();
    for &k in ks {
        let s = s_matrix_circulant(k, u.eigenvalues())?;
        let row = s.first_row();
        let residual = s.unitarity_residual();
        for (i, z) in row.entries().iter().enumerate() {
            table.push(vec![fmt_num(k), i.to_string(), fmt_num(z.re), fmt_num(z.im), fmt_num(residual)]);
        }
        entries.push(json!({
            "k": num(k),
            "generator": row.entries().iter().map(complex_json).collect::<Vec<_>>(),
            "unitarity_residual": num(residual),
        }));
    }
    let mut limit_json = Value::Null;
    if limit {
        let g = high_energy_limit(p)?;
        for (i, z) in g.entries().iter().enumerate() {
            table.push(vec!["inf".into(), i.to_string(), fmt_num(z.re), fmt_num(z.im), String::new()]);
        }
        limit_json = json!(g.entries().iter().map(complex_json).collect::<Vec<_>>());
    }
    let json = json!({
        "params": {"n": p.n, "alpha": num(p.alpha), "t": num(p.t)},
        "entries": entries,
        "limit": limit_json,
    });
    Ok(Report { table, json })
}

/// Lattice, window and grid shared by `bands` and `sweep`.
pub struct DiagramConfig {
    pub family: LatticeFamily,
    pub window: EnergyWindow,
    pub resolution: Option<f64>,
    pub t_min: f64,
    pub t_max: f64,
    pub t_steps: usize,
}

pub const ROW_HEADER: [&str; 6] = ["t", "e_lo", "e_hi", "edge_lo", "edge_hi", "kind"];

pub fn diagram(cfg: &DiagramConfig) -> Result<Report> {
    let resolution = cfg.resolution.unwrap_or_else(|| default_resolution(cfg.family.ell));
    let grid = uniform_t_grid(cfg.t_min, cfg.t_max, cfg.t_steps)?;
    let d = build_diagram(&cfg.family, &grid, &cfg.window, resolution)?;
    Ok(diagram_report(&d, &cfg.window, resolution))
}

fn diagram_report(d: &SpectralDiagram, window: &EnergyWindow, resolution: f64) -> Report {
    let rows: Vec<DiagramRow<f64>> = d.rows();
    let mut table = Table::new(&ROW_HEADER);
    for r in &rows {
        table.push(vec![
            fmt_num(r.t),
            fmt_num(r.e_lo),
            fmt_num(r.e_hi),
            r.edge_lo.to_string(),
            r.edge_hi.to_string(),
            r.kind.as_str().into(),
        ]);
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "t": num(r.t),
                "e_lo": num(r.e_lo),
                "e_hi": num(r.e_hi),
                "edge_lo": r.edge_lo.to_string(),
                "edge_hi": r.edge_hi.to_string(),
                "kind": r.kind.as_str(),
            })
        })
        .collect();
    let json = json!({
        "params": {
            "ell": num(d.params.ell),
            "alpha": num(d.params.alpha),
            "e_min": num(window.e_min),
            "e_max": num(window.e_max),
            "resolution": num(resolution),
        },
        "t_grid": d.t_grid.iter().map(|&t| num(t)).collect::<Vec<_>>(),
        "rows": json_rows,
    });
    Report { table, json }
}
