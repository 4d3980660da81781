use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use abcd_core::{
    bargmann_decompose, classify as classify_matrix, equidiagonalize, little_group_element,
    power_with_tol, transfer_with_tol, transition_curve_with_tol, transition_decompose,
    wigner_decompose, GeneratorParams, LayerStack, Mat2, MomentumKind, WignerCore, WignerForm,
    DEFAULT_TRANSITION_WINDOW,
};

use crate::config::parse_stack;
use crate::error::{CliError, Result};
use crate::format::num;
use crate::{Form, Kind, LittleGroupArgs, StackArgs};

/// Determinant slack accepted for matrices typed on the command line.
const INPUT_DET_TOL: f64 = 1e-9;

pub struct Context {
    pub digits: usize,
    pub tol: f64,
}

impl Context {
    fn n(&self, x: f64) -> String {
        num(x, self.digits)
    }

    fn entries(&self, m: &Mat2) -> String {
        format!(
            "a={} b={} c={} d={}",
            self.n(m.a()),
            self.n(m.b()),
            self.n(m.c()),
            self.n(m.d())
        )
    }
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn stdout_err(source: std::io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source,
    }
}

fn input_matrix(e: &[f64]) -> Result<Mat2> {
    let [a, b, c, d] = e else {
        return Err(CliError::Input("expected four matrix entries".into()));
    };
    Mat2::with_tolerance(*a, *b, *c, *d, INPUT_DET_TOL).map_err(|err| match err {
        abcd_core::Error::NotUnimodular { det } => {
            CliError::Input(format!("not unimodular: determinant is {det}, expected 1"))
        }
        other => other.into(),
    })
}

pub fn classify(ctx: &Context, entries: &[f64], out: &mut dyn Write) -> Result<()> {
    let m = input_matrix(entries)?;
    let class = classify_matrix(&m, ctx.tol);
    let eq = equidiagonalize(&m)?;
    let sign = if class.negative_trace {
        " negative_trace"
    } else {
        ""
    };
    writeln!(out, "{} trace={}{sign}", class.kind, ctx.n(class.trace)).map_err(stdout_err)?;
    writeln!(out, "equidiagonal {}", ctx.entries(&eq.matrix)).map_err(stdout_err)?;
    writeln!(out, "alpha={}", ctx.n(eq.alpha)).map_err(stdout_err)?;
    Ok(())
}

fn wigner_lines(ctx: &Context, w: &WignerForm) -> Vec<String> {
    let core = match w.core {
        WignerCore::Elliptic { phi } => format!("phi={}", ctx.n(phi)),
        WignerCore::Hyperbolic { chi } => format!("chi={}", ctx.n(chi)),
        WignerCore::Parabolic { gamma } => format!("gamma={}", ctx.n(gamma)),
    };
    vec![
        format!("class={}", w.kind()),
        core,
        format!("eta={}", ctx.n(w.eta)),
        format!("negative={}", w.negative),
        format!("flipped={}", w.flipped),
    ]
}

pub fn decompose(ctx: &Context, entries: &[f64], form: Form, out: &mut dyn Write) -> Result<()> {
    let m = input_matrix(entries)?;
    let eq = equidiagonalize(&m)?;
    let mut lines = vec![format!("alpha={}", ctx.n(eq.alpha))];
    let residual = match form {
        Form::Wigner => {
            let w = wigner_decompose(&eq.matrix, ctx.tol)?;
            lines.insert(0, "form=wigner".into());
            lines.extend(wigner_lines(ctx, &w));
            eq.unrotate(&w.recompose()?)?.max_abs_diff(&m)
        }
        Form::Bargmann => {
            let bf = bargmann_decompose(&eq.matrix)?;
            lines.insert(0, "form=bargmann".into());
            lines.push(format!("theta={}", ctx.n(bf.theta)));
            lines.push(format!("lambda={}", ctx.n(bf.lambda)));
            lines.push(format!("iwasawa_gap={}", ctx.n(bf.iwasawa_gap())));
            eq.unrotate(&bf.recompose()?)?.max_abs_diff(&m)
        }
        Form::Transition => {
            let t = transition_decompose(&eq.matrix, DEFAULT_TRANSITION_WINDOW)?;
            lines.insert(0, "form=transition".into());
            lines.push(format!("alpha_t={}", ctx.n(t.alpha)));
            lines.push(format!("beta={}", ctx.n(t.beta)));
            lines.push(format!("epsilon={}", ctx.n(t.epsilon)));
            lines.push(format!("eta={}", ctx.n(t.eta)));
            lines.push(format!("mirrored={}", t.mirrored));
            let approx = t.recompose_first_order();
            let first_order = Mat2::with_tolerance(
                approx[0][0],
                approx[0][1],
                approx[1][0],
                approx[1][1],
                f64::INFINITY,
            )?;
            lines.push(format!(
                "first_order_error={}",
                ctx.n(first_order.max_abs_diff(&eq.matrix))
            ));
            lines.push(format!("error_bound={}", ctx.n(t.error_bound())));
            eq.unrotate(&t.recompose_exact()?)?.max_abs_diff(&m)
        }
    };
    lines.push(format!("residual={}", ctx.n(residual)));
    for line in lines {
        writeln!(out, "{line}").map_err(stdout_err)?;
    }
    Ok(())
}

fn load_stack(args: &StackArgs) -> Result<LayerStack> {
    let (phi1, phi2, eta, file_periods) = match (&args.config, args.phi1, args.phi2, args.eta) {
        (Some(path), None, None, None) => {
            let text = std::fs::read_to_string(path).map_err(io_err(path))?;
            let c = parse_stack(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            (c.phi1, c.phi2, c.eta, c.periods)
        }
        (None, Some(phi1), Some(phi2), Some(eta)) => (phi1, phi2, eta, None),
        _ => {
            return Err(CliError::Input(
                "give either a stack file or all of --phi1, --phi2, --eta".into(),
            ))
        }
    };
    let periods = args.periods.or(file_periods).unwrap_or(1);
    Ok(LayerStack::new(phi1, phi2, eta, periods)?)
}

pub fn stack(ctx: &Context, args: &StackArgs, out: &mut dyn Write) -> Result<()> {
    let s = load_stack(args)?;
    let r = transfer_with_tol(&s, ctx.tol)?;
    let b = &r.bargmann;
    let mut lines = vec![
        format!(
            "stack phi1={} phi2={} eta={} periods={}",
            ctx.n(s.phi1),
            ctx.n(s.phi2),
            ctx.n(s.eta),
            s.periods
        ),
        format!("cycle {}", ctx.entries(&r.cycle)),
        format!("class={} trace={}", r.class.kind, ctx.n(r.class.trace)),
        format!("band={}", r.band),
        format!(
            "bargmann lambda={} theta={} theta_star={}",
            ctx.n(b.lambda),
            ctx.n(b.theta),
            ctx.n(b.theta_star)
        ),
        format!("wigner {}", wigner_lines(ctx, &r.wigner)[1..].join(" ")),
        format!("transfer {}", ctx.entries(&r.transfer_n)),
    ];
    if let Some(path) = &args.csv {
        let file = File::create(path).map_err(io_err(path))?;
        let mut w = BufWriter::new(file);
        writeln!(w, "n,a,b,c,d").map_err(io_err(path))?;
        for n in 0..=s.periods {
            let m = power_with_tol(&r.cycle, n, ctx.tol)?;
            writeln!(
                w,
                "{n},{},{},{},{}",
                ctx.n(m.a()),
                ctx.n(m.b()),
                ctx.n(m.c()),
                ctx.n(m.d())
            )
            .map_err(io_err(path))?;
        }
        w.flush().map_err(io_err(path))?;
        lines.push(format!("csv rows={}", s.periods + 1));
    }
    for line in lines {
        writeln!(out, "{line}").map_err(stdout_err)?;
    }
    Ok(())
}

pub const CURVE_HEADER: &str = "epsilon,diag,offdiag_upper,offdiag_lower,class,angle_or_rapidity";

pub fn transition_curve(
    ctx: &Context,
    eta: f64,
    eps_range: [f64; 2],
    steps: usize,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<()> {
    let samples = transition_curve_with_tol(eta, eps_range, steps, ctx.tol)?;
    let mut text = String::with_capacity(64 * samples.len());
    text.push_str(CURVE_HEADER);
    text.push('\n');
    for s in &samples {
        text.push_str(&format!(
            "{},{},{},{},{},{}\n",
            ctx.n(s.epsilon),
            ctx.n(s.diag),
            ctx.n(s.upper),
            ctx.n(s.lower),
            s.class,
            ctx.n(s.angle)
        ));
    }
    match csv {
        Some(path) => std::fs::write(path, text).map_err(io_err(path)),
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

pub fn little_group(ctx: &Context, args: &LittleGroupArgs, out: &mut dyn Write) -> Result<()> {
    let need = |v: Option<f64>, flag: &str| {
        v.ok_or_else(|| {
            CliError::Input(format!("--kind {:?} needs {flag}", args.kind).to_lowercase())
        })
    };
    let kind = match args.kind {
        Kind::Massive => MomentumKind::Massive {
            mass: need(args.mass, "--mass")?,
            momentum: args.momentum,
        },
        Kind::Spacelike => MomentumKind::Spacelike {
            momentum: args.momentum,
            energy: need(args.energy, "--energy")?,
        },
        Kind::Massless => MomentumKind::Massless {
            momentum: args.momentum,
        },
    };
    let e = little_group_element(&kind, args.param)?;
    let p = e.fixed_momentum;
    let params = match e.generator_params {
        GeneratorParams::Rotation { eta, phi } => format!("eta={} phi={}", ctx.n(eta), ctx.n(phi)),
        GeneratorParams::Squeeze { eta, chi } => format!("eta={} chi={}", ctx.n(eta), ctx.n(chi)),
        GeneratorParams::Gauge { gamma } => format!("gamma={}", ctx.n(gamma)),
    };
    let mut lines = vec![
        format!("kind={:?}", args.kind).to_lowercase(),
        format!(
            "momentum x={} y={} z={} t={}",
            ctx.n(p.x),
            ctx.n(p.y),
            ctx.n(p.z),
            ctx.n(p.t)
        ),
        format!("generator {params}"),
        format!("core {}", ctx.entries(&e.core)),
    ];
    for row in e.mat4.rows() {
        let cells: Vec<String> = row.iter().map(|x| ctx.n(*x)).collect();
        lines.push(format!("row {}", cells.join(" ")));
    }
    lines.push(format!("residual={}", ctx.n(e.residual())));
    for line in lines {
        writeln!(out, "{line}").map_err(stdout_err)?;
    }
    Ok(())
}
