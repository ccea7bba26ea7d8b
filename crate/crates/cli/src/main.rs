mod render;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starcoh::arrows::System;
use starcoh::batch::par_map;
use starcoh::cutelim::{eliminate_with, Options, Strategy};
use starcoh::decide::{equal_in, Decision};
use starcoh::{
    denote, gentzenize, graph_of, parse_formula, parse_net, parse_term, worked_example, BrauerArrow, Error, Verdict,
};

#[derive(Parser)]
#[command(name = "starcoh", version, about = "Graphs, Gentzen nets and equality for arrow terms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and print canonical text.
    Parse(ParseArgs),
    /// Print the type `A |- B` of a term.
    Type {
        #[arg(short = 't', long = "term")]
        term: String,
    },
    /// Print the Brauer diagram of a term.
    Graph {
        #[arg(short = 't', long = "term")]
        term: String,
        #[arg(long, value_enum, default_value_t = Format::Pairs)]
        format: Format,
    },
    /// Decide equality of two terms, or of every `lhs == rhs` line in a file.
    Eq(EqArgs),
    /// Translate a term into a Gentzen net.
    Gentzenize {
        #[arg(short = 't', long = "term")]
        term: String,
        /// Also print the denotation of the net.
        #[arg(long)]
        denote: bool,
    },
    /// Eliminate the cuts of a net.
    Cutelim {
        #[arg(short = 'n', long = "net")]
        net: String,
        /// Print each reduction step with its complexities.
        #[arg(long)]
        trace: bool,
        /// Reduce the left premise first on rank ties.
        #[arg(long)]
        f_side_first: bool,
        /// Check the graph after every step.
        #[arg(long)]
        checked: bool,
    },
    /// Built-in examples.
    Demo {
        #[arg(value_enum)]
        which: Demo,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ParseArgs {
    #[arg(short = 'f', long = "formula")]
    formula: Option<String>,
    #[arg(short = 't', long = "term")]
    term: Option<String>,
    #[arg(short = 'n', long = "net")]
    net: Option<String>,
}

#[derive(Args)]
struct EqArgs {
    #[arg(short = 't', long = "term", num_args = 1, required_unless_present = "from_file")]
    terms: Vec<String>,
    #[arg(long, value_enum, default_value_t = SystemArg::S)]
    system: SystemArg,
    /// Corpus of `lhs == rhs` lines; `#` starts a comment.
    #[arg(long, conflicts_with = "terms")]
    from_file: Option<String>,
    /// Print the decision with both graphs as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pairs,
    Dot,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Ds,
    Pn,
    S,
}

impl From<SystemArg> for System {
    fn from(s: SystemArg) -> System {
        match s {
            SystemArg::Ds => System::Ds,
            SystemArg::Pn => System::Pn,
            SystemArg::S => System::S,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Demo {
    ComposeExample,
}

fn error_code(e: &Error) -> u8 {
    if e.is_syntax() {
        4
    } else {
        3
    }
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Equal => 0,
        Verdict::Unequal => 1,
        Verdict::GraphEqualOnly => 2,
    }
}

fn render(b: &BrauerArrow, format: Format) -> String {
    match format {
        Format::Pairs => format!("{}\n", b.to_json()),
        Format::Dot => render::dot(b),
        Format::Ascii => render::ascii(b),
    }
}

fn decide_text(system: System, lhs: &str, rhs: &str) -> Result<Decision, Error> {
    let l = parse_term(lhs)?;
    let r = parse_term(rhs)?;
    equal_in(system, &l, &r)
}

fn print_decision(d: &Decision, json: bool) {
    if json {
        println!("{}", serde_json::to_string(d).expect("serializable"));
    } else {
        println!("{}", d.verdict);
    }
}

fn corpus(path: &str, system: System, json: bool) -> Result<u8, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::IllTyped(format!("{path}: {e}")))?;
    let items: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim().to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let results = par_map(&items, |(_, line)| match line.split_once("==") {
        Some((l, r)) => decide_text(system, l.trim(), r.trim()),
        None => Err(Error::Syntax { pos: 0, msg: "expected `lhs == rhs`".into() }),
    });
    let mut code = 0;
    for ((line, _), r) in items.iter().zip(results) {
        match r {
            Ok(d) => {
                print!("{line}: ");
                print_decision(&d, json);
                code = code.max(verdict_code(d.verdict));
            }
            Err(e) => {
                println!("{line}: error: {e}");
                code = code.max(error_code(&e));
            }
        }
    }
    Ok(code)
}

fn run(cmd: Command) -> Result<u8, Error> {
    match cmd {
        Command::Parse(a) => {
            if let Some(f) = a.formula {
                println!("{}", parse_formula(&f)?);
            } else if let Some(t) = a.term {
                println!("{}", parse_term(&t)?);
            } else if let Some(n) = a.net {
                println!("{}", parse_net(&n)?);
            }
        }
        Command::Type { term } => {
            let (a, b) = parse_term(&term)?.type_of()?;
            println!("{a} |- {b}");
        }
        Command::Graph { term, format } => {
            print!("{}", render(&graph_of(&parse_term(&term)?)?, format));
        }
        Command::Eq(a) => {
            let system = a.system.into();
            if let Some(path) = a.from_file {
                return corpus(&path, system, a.json);
            }
            let [l, r] = a.terms.as_slice() else {
                return Err(Error::Syntax { pos: 0, msg: "eq takes exactly two terms".into() });
            };
            let d = decide_text(system, l, r)?;
            print_decision(&d, a.json);
            return Ok(verdict_code(d.verdict));
        }
        Command::Gentzenize { term, denote: show } => {
            let n = gentzenize(&parse_term(&term)?)?;
            println!("{n}");
            if show {
                println!("= {}", denote(&n));
            }
        }
        Command::Cutelim { net, trace, f_side_first, checked } => {
            let strategy = if f_side_first { Strategy::FSideFirst } else { Strategy::GSideFirst };
            let (out, steps) = eliminate_with(&parse_net(&net)?, Options { strategy, checked })?;
            if trace {
                for s in &steps {
                    println!("{s}");
                }
            }
            println!("{out}");
        }
        Command::Demo { which: Demo::ComposeExample } => {
            let (p, r) = worked_example();
            let c = BrauerArrow::compose(&p, &r)?;
            println!("R = {}", r.to_json());
            println!("P = {}", p.to_json());
            println!("P * R = {}", c.to_json());
            print!("{}", render::ascii(&c));
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
