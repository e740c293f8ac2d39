//! The `admissible` command-line tool. Every command builds a JSON result and
//! renders it as a table or LaTeX on request.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dominance::{self, SasOptions};
use crate::epistemic::{self, Morphism, TypeStructure};
use crate::error::{Error, Result};
use crate::game::{read_file, Game, ProductSet};
use crate::lps::{Event, Lps};
use crate::verify;

pub const DEFAULT_SEED: u64 = 20240607;

#[derive(Parser, Debug)]
#[command(
    name = "admissible",
    version,
    about = "Exact admissibility and cautious-belief computations for finite games"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Check SAS candidates concurrently.
    #[arg(long, global = true)]
    pub parallel: bool,
    /// Lift the SAS enumeration size guard.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Iterated admissibility rounds.
    Ia { game: PathBuf },
    /// Self-admissible sets.
    Sas {
        #[command(subcommand)]
        action: SasAction,
    },
    /// Build a finite lexicographic type structure.
    Struct {
        #[command(subcommand)]
        action: StructAction,
    },
    /// Epistemic event hierarchies.
    Epistemic {
        #[command(subcommand)]
        action: EpistemicAction,
    },
    /// Type morphisms.
    Morphism {
        #[command(subcommand)]
        action: MorphismAction,
    },
    /// Belief notions of a single LPS.
    LpsCheck {
        lps: PathBuf,
        /// Semicolon-separated atoms `s|t`; a bare `s` means its whole cylinder.
        #[arg(long)]
        event: String,
        #[arg(long, value_enum)]
        notion: Notion,
    },
    /// Lexicographic rationalizability rounds with witnesses.
    Stahl { game: PathBuf },
    /// Re-run the fixed worked instances and list what cannot be run.
    VerifyPaper,
}

#[derive(Subcommand, Debug)]
pub enum SasAction {
    Enumerate {
        game: PathBuf,
    },
    Check {
        game: PathBuf,
        /// e.g. `a=u;b=l,r`
        #[arg(long)]
        set: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum StructAction {
    BuildLemma1 {
        game: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    BuildSas {
        game: PathBuf,
        #[arg(long)]
        sas: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum EpistemicAction {
    Iterate {
        structure: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Rcbr)]
        mode: Mode,
        /// Print exactly this many rounds.
        #[arg(long)]
        rounds: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Rcbr,
    Rhat,
}

#[derive(Subcommand, Debug)]
pub enum MorphismAction {
    Verify {
        src: PathBuf,
        dst: PathBuf,
        phi: PathBuf,
        #[arg(long, default_value_t = 5)]
        depth: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Notion {
    Cautious,
    Weak,
    Certain,
    WeakAssumption,
    Full,
}

/// A command result: JSON plus a table derived from it.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Extra LaTeX placed before the result table.
    pub latex_preamble: Option<String>,
    /// Non-zero when the command ran but its check failed.
    pub status: i32,
}

impl Report {
    fn new(title: impl Into<String>, json: Value, header: &[&str]) -> Self {
        Report {
            json,
            title: title.into(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            latex_preamble: None,
            status: 0,
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serializable")),
            Format::Table => self.render_table(),
            Format::Latex => self.render_latex(),
        }
    }

    fn render_table(&self) -> String {
        let cols = self.header.len();
        let mut width: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (k, c) in r.iter().enumerate().take(cols) {
                width[k] = width[k].max(c.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (k, c) in cells.iter().enumerate() {
                if k + 1 == cells.len() {
                    s.push_str(c);
                } else {
                    s.push_str(c);
                    s.push_str(&" ".repeat(width[k] - c.chars().count() + 2));
                }
            }
            s.trim_end().to_string()
        };
        let mut out = format!("{}\n", self.title);
        out.push_str(&line(&self.header));
        out.push('\n');
        out.push_str(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  "));
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        out
    }

    fn render_latex(&self) -> String {
        let mut out = String::new();
        if let Some(p) = &self.latex_preamble {
            out.push_str(p);
            out.push('\n');
        }
        out.push_str(&format!("% {}\n", self.title));
        out.push_str(&format!(
            "\\begin{{tabular}}{{{}}}\n\\hline\n",
            "|l".repeat(self.header.len()) + "|"
        ));
        let fmt = |cells: &[String]| cells.iter().map(|c| latex_escape(c)).collect::<Vec<_>>().join(" & ");
        out.push_str(&format!("{} \\\\ \\hline\n", fmt(&self.header)));
        for r in &self.rows {
            out.push_str(&format!("{} \\\\ \\hline\n", fmt(r)));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

pub fn latex_escape(s: &str) -> String {
    let mut out = String::new();
    let mut math = false;
    let flush = |out: &mut String, piece: &str, m: bool, math: &mut bool| {
        if m != *math {
            out.push('$');
            *math = m;
        }
        out.push_str(piece);
    };
    for ch in s.chars() {
        match ch {
            '∅' => flush(&mut out, "\\emptyset ", true, &mut math),
            '×' => flush(&mut out, "\\times ", true, &mut math),
            '∞' => flush(&mut out, "\\infty ", true, &mut math),
            'ε' => flush(&mut out, "\\varepsilon ", true, &mut math),
            '^' => flush(&mut out, "^", true, &mut math),
            '{' => flush(&mut out, "\\{", true, &mut math),
            '}' => flush(&mut out, "\\}", true, &mut math),
            '_' => flush(&mut out, "\\_", false, &mut math),
            '&' | '%' | '#' | '$' => flush(&mut out, &format!("\\{ch}"), false, &mut math),
            '|' => flush(&mut out, "\\mid ", true, &mut math),
            c if math && (c.is_alphanumeric() || c == ',' || c == '(' || c == ')' || c == '/') => {
                out.push(c);
            }
            c => flush(&mut out, &c.to_string(), false, &mut math),
        }
    }
    if math {
        out.push('$');
    }
    out
}

/// Bimatrix payoff table for two-player games.
pub fn payoff_latex(game: &Game) -> Option<String> {
    if game.num_players() != 2 {
        return None;
    }
    let cols = game.num_strategies(1);
    let mut out = format!("\\begin{{tabular}}{{|c|{}}}\n\\hline\n", "c|".repeat(cols));
    out.push_str(&format!("${}\\backslash {}$", game.player_name(0), game.player_name(1)));
    for c in game.strategy_names(1) {
        out.push_str(&format!(" & ${c}$"));
    }
    out.push_str(" \\\\ \\hline\n");
    for (r, rname) in game.strategy_names(0).iter().enumerate() {
        out.push_str(&format!("${rname}$"));
        for c in 0..cols {
            let p = game.profile_index(&[r, c]);
            let a = game.payoff(0, &game.profile(p));
            let b = game.payoff(1, &game.profile(p));
            out.push_str(&format!(" & ${a},{b}$"));
        }
        out.push_str(" \\\\ \\hline\n");
    }
    out.push_str("\\end{tabular}");
    Some(out)
}

/// Parses argv (including the program name) and runs the command, writing to
/// `out` and `err`. Returns the process exit status.
pub fn main_with(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            let _ = write!(out, "{}", report.render(cli.format));
            report.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Ia { game } => ia(&Game::load(game)?),
        Command::Sas { action } => match action {
            SasAction::Enumerate { game } => {
                let opts = SasOptions {
                    force: cli.force,
                    parallel: cli.parallel,
                    ..SasOptions::default()
                };
                sas_enumerate(&Game::load(game)?, &opts)
            }
            SasAction::Check { game, set } => {
                let g = Game::load(game)?;
                let q = g.parse_product(set)?;
                sas_check(&g, &q)
            }
        },
        Command::Struct { action } => match action {
            StructAction::BuildLemma1 { game, output } => {
                let g = Game::load(game)?;
                structure_report(&epistemic::build_lemma1_structure(&g)?, output.as_deref())
            }
            StructAction::BuildSas { game, sas, output } => {
                let g = Game::load(game)?;
                let q = g.parse_product(sas)?;
                structure_report(&epistemic::build_sas_structure(&g, &q)?, output.as_deref())
            }
        },
        Command::Epistemic { action } => match action {
            EpistemicAction::Iterate {
                structure,
                mode,
                rounds,
            } => iterate(&TypeStructure::load(structure)?, *mode, *rounds),
        },
        Command::Morphism { action } => match action {
            MorphismAction::Verify { src, dst, phi, depth } => {
                let s = TypeStructure::load(src)?;
                let d = TypeStructure::load(dst)?;
                let doc: Value = serde_json::from_str(&read_file(phi)?)?;
                let m = Morphism::from_json(&doc, &s, &d)?;
                morphism_report(&s, &d, &m, *depth)
            }
        },
        Command::LpsCheck { lps, event, notion } => {
            let doc: Value = serde_json::from_str(&read_file(lps)?)?;
            let mu = Lps::from_json(&doc)?;
            let e = parse_event(&mu, event)?;
            lps_check(&mu, &e, *notion)
        }
        Command::Stahl { game } => stahl(&Game::load(game)?),
        Command::VerifyPaper => Ok(verify_report(cli.seed)),
    }
}

pub fn ia(game: &Game) -> Result<Report> {
    let trace = dominance::iterated_admissibility(game)?;
    let mut r = Report::new(
        "iterated admissibility",
        trace.to_json(game),
        &["round", "set", "removed"],
    );
    for (m, q) in trace.rounds.iter().enumerate() {
        let removed = if m == 0 {
            String::new()
        } else {
            trace.eliminated[m - 1]
                .iter()
                .map(|w| game.strategy_name(w.player, w.dominated).to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        r.row(vec![format!("S^{m}"), game.format_product(q), removed]);
    }
    r.row(vec![
        "S^∞".into(),
        game.format_product(trace.limit()),
        format!("fixpoint {}", trace.fixpoint),
    ]);
    r.latex_preamble = payoff_latex(game);
    Ok(r)
}

pub fn sas_enumerate(game: &Game, opts: &SasOptions) -> Result<Report> {
    let all = dominance::enumerate_sas(game, opts)?;
    let json = json!({"sas": all.iter().map(|q| json!({"set": game.product_to_json(q), "text": game.format_product(q)})).collect::<Vec<_>>()});
    let mut r = Report::new("self-admissible sets", json, &["#", "set"]);
    for (k, q) in all.iter().enumerate() {
        r.row(vec![(k + 1).to_string(), game.format_product(q)]);
    }
    r.latex_preamble = payoff_latex(game);
    Ok(r)
}

pub fn sas_check(game: &Game, q: &ProductSet) -> Result<Report> {
    let v = dominance::is_sas(game, q)?;
    let json = json!({
        "set": game.format_product(q),
        "holds": v.holds,
        "failures": v.failures.iter().map(|f| f.to_json(game)).collect::<Vec<_>>(),
    });
    let mut r = Report::new(
        format!("SAS check of {}", game.format_product(q)),
        json,
        &["condition", "detail"],
    );
    if v.holds {
        r.row(vec!["all".into(), "holds".into()]);
    }
    for f in &v.failures {
        r.row(vec![f.condition().into(), f.to_json(game).to_string()]);
    }
    Ok(r)
}

fn structure_report(ts: &TypeStructure, output: Option<&Path>) -> Result<Report> {
    let doc = ts.to_json();
    if let Some(path) = output {
        let text = serde_json::to_string_pretty(&doc).expect("serializable");
        std::fs::write(path, text + "\n").map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    let game = ts.game();
    let mut r = Report::new("type structure", doc, &["player", "type", "level", "belief"]);
    for i in 0..ts.num_players() {
        for t in 0..ts.num_types(i) {
            let mu = ts.belief(i, t);
            for (l, lvl) in mu.levels().iter().enumerate() {
                let parts: Vec<String> = lvl
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
                    .map(|(a, x)| format!("{}:{x}", mu.space().atom_name(a)))
                    .collect();
                r.row(vec![
                    game.player_name(i).into(),
                    ts.type_name(i, t).into(),
                    (l + 1).to_string(),
                    parts.join(" "),
                ]);
            }
        }
    }
    Ok(r)
}

pub fn iterate(ts: &TypeStructure, mode: Mode, rounds: Option<usize>) -> Result<Report> {
    let hier = match mode {
        Mode::Rcbr => epistemic::iterate_rcbr(ts)?,
        Mode::Rhat => epistemic::iterate_rhat(ts)?,
    };
    let game = ts.game();
    let shown = rounds.unwrap_or(hier.rounds.len());
    let name = match mode {
        Mode::Rcbr => "R",
        Mode::Rhat => "R̂",
    };
    let mut json_rounds = Vec::new();
    let mut header = vec!["round".to_string()];
    header.extend(game.players().iter().cloned());
    header.push("projection".into());
    let mut r = Report::new(format!("{name}^m hierarchy"), Value::Null, &[]);
    r.header = header;
    for m in 1..=shown {
        let e = hier.round(m);
        json_rounds
            .push(json!({"m": m, "event": e.to_json(ts), "projection": game.format_product(&e.projection_product())}));
        let mut row = vec![format!("{name}^{m}")];
        for i in 0..ts.num_players() {
            let cells: Vec<String> = e
                .component(i)
                .iter()
                .map(|&(s, t)| format!("({},{})", game.strategy_name(i, s), ts.type_name(i, t)))
                .collect();
            row.push(if cells.is_empty() {
                "∅".into()
            } else {
                cells.join(" ")
            });
        }
        row.push(game.format_product(&e.projection_product()));
        r.row(row);
    }
    let limit = hier.limit();
    let mut row = vec![format!("{name}^∞")];
    for i in 0..ts.num_players() {
        row.push(format!("{}", limit.component(i).len()));
    }
    row.push(game.format_product(&limit.projection_product()));
    r.row(row);
    let mut json = json!({
        "mode": match mode { Mode::Rcbr => "rcbr", Mode::Rhat => "rhat" },
        "rounds": json_rounds,
        "fixpoint": hier.rounds.len(),
        "limit": limit.to_json(ts),
        "projection": game.format_product(&limit.projection_product()),
    });
    if mode == Mode::Rhat {
        json["transparency"] = epistemic::transparency_of_cautiousness(ts).to_json(ts);
    }
    r.json = json;
    Ok(r)
}

fn morphism_report(src: &TypeStructure, dst: &TypeStructure, phi: &Morphism, depth: usize) -> Result<Report> {
    let rep = epistemic::check_morphism_preservation(src, dst, phi, depth)?;
    let mut r = Report::new("morphism check", rep.to_json(), &["check", "result", "witness"]);
    r.row(vec!["belief maps commute".into(), pass(rep.is_morphism), String::new()]);
    for c in &rep.checks {
        r.row(vec![
            c.name.clone(),
            pass(c.passed),
            c.witness.clone().unwrap_or_default(),
        ]);
    }
    r.status = if rep.passed() { 0 } else { 1 };
    Ok(r)
}

fn pass(b: bool) -> String {
    if b { "pass" } else { "FAIL" }.into()
}

/// `l|tb1;r` style event: atoms by name, or whole cylinders by label.
pub fn parse_event(mu: &Lps, text: &str) -> Result<Event> {
    let space = mu.space();
    let mut e = Event::empty(space.len());
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some(a) = space.atom_index(part) {
            e.insert(a);
        } else if let Some(l) = space.label_index(part) {
            for &a in space.atoms_with_label(l) {
                e.insert(a);
            }
        } else {
            return Err(Error::invalid(format!("unknown atom or label {part:?}")));
        }
    }
    Ok(e)
}

pub fn lps_check(mu: &Lps, e: &Event, notion: Notion) -> Result<Report> {
    let (name, value) = match notion {
        Notion::Cautious => ("cautious", json!(mu.cautiously_believes(e)?)),
        Notion::Weak => ("weak", json!(mu.weakly_believes(e))),
        Notion::Certain => ("certain", json!(mu.certainly_believes(e))),
        Notion::WeakAssumption => ("weak-assumption", json!(mu.weakly_assumed(e)?)),
        Notion::Full => ("full", json!(mu.fully_believes(e)?)),
    };
    let atoms: Vec<&str> = e.iter().map(|a| mu.space().atom_name(a)).collect();
    let shown = match &value {
        Value::Null => "none".to_string(),
        Value::Number(n) => format!("level {n}"),
        v => v.to_string(),
    };
    let mut r = Report::new(
        "belief check",
        json!({"notion": name, "event": atoms, "result": value}),
        &["notion", "event", "result"],
    );
    r.row(vec![name.into(), format!("{{{}}}", atoms.join(",")), shown]);
    Ok(r)
}

pub fn stahl(game: &Game) -> Result<Report> {
    let st = epistemic::stahl_procedure(game)?;
    let witnesses: Vec<Value> = st
        .witnesses
        .iter()
        .map(|round| {
            Value::Array(
                round
                    .iter()
                    .map(|(i, s, stack)| {
                        json!({
                            "player": game.player_name(*i),
                            "strategy": game.strategy_name(*i, *s),
                            "lps": stack.iter().map(|b| game.belief_to_json(b)).collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            )
        })
        .collect();
    let json = json!({
        "rounds": st.rounds.iter().map(|q| game.product_to_json(q)).collect::<Vec<_>>(),
        "fixpoint": st.fixpoint,
        "limit": game.product_to_json(st.limit()),
        "witnesses": witnesses,
    });
    let mut r = Report::new("lexicographic rationalizability", json, &["round", "set"]);
    for (m, q) in st.rounds.iter().enumerate() {
        r.row(vec![format!("Ŝ^{m}"), game.format_product(q)]);
    }
    r.row(vec!["Ŝ^∞".into(), game.format_product(st.limit())]);
    Ok(r)
}

pub fn verify_report(seed: u64) -> Report {
    let items = verify::run_all(seed);
    let json = json!({
        "seed": seed,
        "items": items.iter().map(|it| json!({"name": it.name, "status": it.status.as_str(), "detail": it.detail})).collect::<Vec<_>>(),
    });
    let mut r = Report::new("worked-instance regression", json, &["instance", "status", "detail"]);
    for it in &items {
        r.row(vec![it.name.clone(), it.status.as_str().into(), it.detail.clone()]);
    }
    r.status = if items.iter().any(|it| it.status == verify::Status::Fail) {
        1
    } else {
        0
    };
    r
}
