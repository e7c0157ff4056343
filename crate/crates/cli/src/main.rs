use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kntab::cocrystal::generate_cocrystal;
use kntab::crystal::{generate_crystal, CrystalGraph, VertexSet};
use kntab::keys::{
    left_key_column_direct_traced, left_key_direct, left_key_sjdt, left_key_swaps,
    right_key_column_direct_traced, right_key_direct, right_key_sjdt, right_key_swaps,
};
use kntab::laurent::LaurentPolynomial;
use kntab::rsk::{dual_rsk, Biword};
use kntab::sjdt::{rectify_traced, reshape_traced};
use kntab::weyl::SignedPermWord;
use kntab::{key_of_weight, Column, Error, Partition, SkewTableau};

/// Kashiwara-Nakashima tableaux: validation, symplectic jeu de taquin,
/// crystals, Demazure atoms, keys and cocrystals.
///
/// Tableaux are given as row literals such as `1,3,-1;3,-3;-3` (`-k` is k
/// barred, `.` an inner cell) or as JSON `{"n":3,"rows":[[1,3,-1],...]}`,
/// either as the last argument or on stdin.
#[derive(Parser)]
#[command(name = "kntab", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Out {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Sjdt,
    Direct,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Traced {
    Rectify,
    RightKey,
    LeftKey,
}

#[derive(clap::Args)]
struct Input {
    /// Size of the alphabet [±n].
    #[arg(long)]
    n: Option<usize>,
    /// Tableau literal or JSON; read from stdin when absent.
    #[arg(allow_hyphen_values = true)]
    input: Option<String>,
}

#[derive(clap::Args)]
struct CrystalArgs {
    /// Partition, e.g. `2,1`. Defaults to the shape of `--v`.
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Verb {
    /// Check the KN conditions.
    Validate {
        #[command(flatten)]
        input: Input,
        /// Read the input as a single column, entries top to bottom.
        #[arg(long)]
        column: bool,
    },
    /// Split form of a tableau, or `ℓC rC` of a column.
    Split {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        column: bool,
    },
    /// The bijection between admissible and coadmissible columns.
    Phi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        inverse: bool,
    },
    /// Rectify a skew tableau by symplectic jeu de taquin.
    Rectify {
        #[command(flatten)]
        input: Input,
        /// Also print every elementary step.
        #[arg(long)]
        trace: bool,
    },
    /// The skew tableau in the same class with the given column lengths.
    Reshape {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        lengths: Vec<usize>,
        #[arg(long)]
        trace: bool,
    },
    /// Right or left key.
    Key {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "right")]
        side: Side,
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        out: Out,
    },
    /// The crystal of a shape.
    Crystal {
        #[command(flatten)]
        args: CrystalArgs,
        #[arg(long, value_enum, default_value = "text")]
        out: Out,
    },
    /// A Demazure (or opposite Demazure) crystal.
    Demazure {
        #[command(flatten)]
        args: CrystalArgs,
        /// Orbit weight, e.g. `-2,1`.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        /// Word of simple reflections, applied right to left as given.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        opposite: bool,
        #[arg(long, value_enum, default_value = "text")]
        out: Out,
    },
    /// A Demazure atom (or opposite atom).
    Atom {
        #[command(flatten)]
        args: CrystalArgs,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        opposite: bool,
        #[arg(long, value_enum, default_value = "text")]
        out: Out,
    },
    /// Characters as Laurent polynomials.
    Character {
        #[command(flatten)]
        args: CrystalArgs,
        /// Orbit weight; the full character when absent.
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        /// Atom character instead of the Demazure character.
        #[arg(long)]
        atom: bool,
        #[arg(long)]
        opposite: bool,
        /// Sum over tableaux whose right key lies below `K(v)`.
        #[arg(long)]
        via_keys: bool,
        #[arg(long, value_enum, default_value = "text")]
        out: Out,
    },
    /// The cocrystal of a straight tableau.
    Cocrystal {
        #[command(flatten)]
        input: Input,
        /// Number of columns; defaults to the width of the tableau.
        #[arg(long)]
        r: Option<usize>,
        /// Only the vertices whose column lengths permute those of the input.
        #[arg(long)]
        keys: bool,
        #[arg(long, value_enum, default_value = "text")]
        out: Out,
    },
    /// Dual RSK of a biword `t:b t:b ...`.
    Rsk {
        #[arg(long)]
        n: usize,
        biword: Option<String>,
    },
    /// Step logs of rectification and of both key algorithms.
    Trace {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "rectify")]
        what: Traced,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
}

/// What went wrong, mapped to the exit code.
enum Failure {
    Invalid(String),
    /// A well-formed input that fails validation; reported on stdout.
    Rejected(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Invalid(describe(&e))
    }
}

fn describe(e: &Error) -> String {
    match e {
        Error::Parse { row, col, msg } => format!("row {}, column {}: {}", row, col, msg),
        other => other.to_string(),
    }
}

type Outcome = std::result::Result<String, Failure>;

fn read_input(arg: &Option<String>) -> std::result::Result<String, Failure> {
    match arg {
        Some(s) => Ok(s.clone()),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Invalid(format!("reading stdin: {}", e)))?;
            Ok(s)
        }
    }
}

fn load(input: &Input) -> std::result::Result<SkewTableau, Failure> {
    let text = read_input(&input.input)?;
    let text = text.trim();
    if text.starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Failure::Invalid(format!("JSON: {}", e)))?;
        let t = SkewTableau::from_json(&value)?;
        return Ok(match input.n {
            Some(n) => t.with_n(n)?,
            None => t,
        });
    }
    let n = input.n.ok_or_else(|| Failure::Invalid("--n is required for text input".into()))?;
    Ok(SkewTableau::parse(n, text)?)
}

fn load_column(input: &Input) -> std::result::Result<(usize, Column), Failure> {
    let text = read_input(&input.input)?;
    let c: Column = text.trim().parse()?;
    let n = input.n.unwrap_or(c.max_index() as usize);
    if c.max_index() as usize > n {
        return Err(Failure::Invalid(format!("letter out of range for n = {}", n)));
    }
    Ok((n, c))
}

fn require_kn(t: &SkewTableau) -> std::result::Result<(), Failure> {
    t.validate_kn().map_err(|v| Failure::Invalid(v.to_string()))
}

fn parse_ints(s: &str) -> std::result::Result<Vec<i32>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<i32>().map_err(|_| Failure::Invalid(format!("not an integer: {:?}", x))))
        .collect()
}

/// The crystal named by `--shape`/`--n`, falling back on the orbit weight.
fn crystal(args: &CrystalArgs, v: Option<&[i32]>) -> std::result::Result<CrystalGraph, Failure> {
    let shape: Partition = match (&args.shape, v) {
        (Some(s), _) => s.parse()?,
        (None, Some(v)) => {
            let mut parts: Vec<usize> = v.iter().map(|x| x.unsigned_abs() as usize).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(parts)?
        }
        (None, None) => return Err(Failure::Invalid("--shape is required".into())),
    };
    let n = match (args.n, v) {
        (Some(n), _) => n,
        (None, Some(v)) => v.len(),
        (None, None) => return Err(Failure::Invalid("--n is required".into())),
    };
    if let Some(v) = v {
        if v.len() != n {
            return Err(Failure::Invalid(format!("weight has {} entries, expected {}", v.len(), n)));
        }
    }
    Ok(generate_crystal(&shape, n)?)
}

fn vertex_set(g: &CrystalGraph, set: &VertexSet, out: Out) -> String {
    let mut lits: Vec<String> = set.iter().map(|&v| g.vertex(v).to_string()).collect();
    lits.sort();
    match out {
        Out::Json => serde_json::json!({ "size": lits.len(), "vertices": lits }).to_string(),
        _ => lits.join("\n"),
    }
}

fn polynomial(p: &LaurentPolynomial, out: Out) -> String {
    match out {
        Out::Json => p.to_json().to_string(),
        _ => p.to_string(),
    }
}

fn run(verb: Verb) -> Outcome {
    match verb {
        Verb::Validate { input, column } => {
            let t = if column {
                let (n, c) = load_column(&input)?;
                SkewTableau::straight(n, vec![c])?
            } else {
                load(&input)?
            };
            match t.validate_kn() {
                Ok(()) => Ok("ok".into()),
                Err(v) => Err(Failure::Rejected(v.to_string())),
            }
        }
        Verb::Split { input, column } => {
            if column {
                let (_, c) = load_column(&input)?;
                let s = c.split()?;
                Ok(format!("{} {}", s.left, s.right))
            } else {
                let t = load(&input)?;
                require_kn(&t)?;
                Ok(t.split_form()?.to_string())
            }
        }
        Verb::Phi { input, inverse } => {
            let (n, c) = load_column(&input)?;
            let out = if inverse { c.phi_inverse(n)? } else { c.phi()? };
            Ok(out.to_string())
        }
        Verb::Rectify { input, trace } => {
            let t = load(&input)?;
            let (r, steps) = rectify_traced(&t)?;
            let mut out: Vec<String> = Vec::new();
            if trace {
                out.extend(steps.iter().map(|s| s.to_string()));
            }
            out.push(r.to_string());
            Ok(out.join("\n"))
        }
        Verb::Reshape { input, lengths, trace } => {
            let t = load(&input)?;
            let (r, log) = reshape_traced(&t, &lengths)?;
            let mut out: Vec<String> = Vec::new();
            if trace {
                for (k, cols) in log {
                    let placed = SkewTableau::from_column_sequence(t.n(), cols)?;
                    out.push(format!("swap {} {}: {}", k + 1, k + 2, placed));
                }
            }
            out.push(r.to_string());
            Ok(out.join("\n"))
        }
        Verb::Key { input, side, method, out } => key(&load(&input)?, side, method, out),
        Verb::Crystal { args, out } => {
            let g = crystal(&args, None)?;
            Ok(match out {
                Out::Json => serde_json::to_string_pretty(&g.to_json()).unwrap(),
                Out::Dot => g.to_dot(),
                Out::Text => {
                    let mut lines: Vec<String> =
                        g.sorted_ids().iter().map(|&v| g.vertex(v).to_string()).collect();
                    let mut edges: Vec<String> = g
                        .edges()
                        .into_iter()
                        .map(|(v, i, w)| format!("{} -{}-> {}", g.vertex(v), i, g.vertex(w)))
                        .collect();
                    edges.sort();
                    lines.extend(edges);
                    lines.join("\n")
                }
            })
        }
        Verb::Demazure { args, v, word, opposite, out } => {
            let v = v.map(|s| parse_ints(&s)).transpose()?;
            let g = crystal(&args, v.as_deref())?;
            let set = match (v, word) {
                (Some(v), None) if opposite => g.opposite_demazure_for(&v)?,
                (Some(v), None) => g.demazure_for(&v)?,
                (None, Some(w)) => {
                    let word: Vec<usize> = if w.trim().is_empty() {
                        Vec::new()
                    } else {
                        parse_ints(&w)?.into_iter().map(|i| i.max(0) as usize).collect()
                    };
                    let word = SignedPermWord::new(g.n(), word)?;
                    if !word.is_reduced() {
                        eprintln!("warning: the word {} is not reduced", word);
                    }
                    if opposite {
                        g.opposite_demazure_crystal(&word)?
                    } else {
                        g.demazure_crystal(&word)?
                    }
                }
                _ => return Err(Failure::Invalid("give exactly one of --v and --word".into())),
            };
            Ok(vertex_set(&g, &set, out))
        }
        Verb::Atom { args, v, opposite, out } => {
            let v = parse_ints(&v)?;
            let g = crystal(&args, Some(&v))?;
            let set = if opposite { g.opposite_demazure_atom(&v)? } else { g.demazure_atom(&v)? };
            Ok(vertex_set(&g, &set, out))
        }
        Verb::Character { args, v, atom, opposite, via_keys, out } => {
            let v = v.map(|s| parse_ints(&s)).transpose()?;
            let g = crystal(&args, v.as_deref())?;
            let Some(v) = v else {
                return Ok(polynomial(&g.character(), out));
            };
            let p = match (atom, opposite, via_keys) {
                (_, _, true) => {
                    let kv = key_of_weight(&v, g.shape())?;
                    let mut p = LaurentPolynomial::zero(g.n());
                    for t in g.vertices() {
                        let k = if opposite { left_key_direct(t)? } else { right_key_direct(t)? };
                        let below = if atom {
                            k == kv
                        } else if opposite {
                            kv.le_entrywise(&k)
                        } else {
                            k.le_entrywise(&kv)
                        };
                        if below {
                            p.add_term(t.weight(), 1);
                        }
                    }
                    p
                }
                (false, false, false) => g.demazure_character(&v)?,
                (true, false, false) => g.atom_character(&v)?,
                (false, true, false) => g.opposite_demazure_character(&v)?,
                (true, true, false) => g.opposite_atom_character(&v)?,
            };
            Ok(polynomial(&p, out))
        }
        Verb::Cocrystal { input, r, keys, out } => {
            let t = load(&input)?;
            require_kn(&t)?;
            let r = r.unwrap_or(t.num_columns());
            let cc = generate_cocrystal(&t, r)?;
            if keys {
                let mut lits: Vec<String> = cc.keys().iter().map(|x| x.to_string()).collect();
                lits.sort();
                return Ok(match out {
                    Out::Json => serde_json::json!({ "keys": lits }).to_string(),
                    _ => lits.join("\n"),
                });
            }
            Ok(match out {
                Out::Json => serde_json::to_string_pretty(&cc.to_json()).unwrap(),
                Out::Dot => cc.to_dot(),
                Out::Text => {
                    let mut lines: Vec<String> = (0..cc.len())
                        .map(|v| {
                            let w: Vec<String> = cc.weight(v).iter().map(|x| x.to_string()).collect();
                            format!("{}  [{}]", cc.vertex(v), w.join(","))
                        })
                        .collect();
                    lines.sort();
                    lines.join("\n")
                }
            })
        }
        Verb::Rsk { n, biword } => {
            let b: Biword = read_input(&biword)?.trim().parse()?;
            let (p, q) = dual_rsk(n, &b)?;
            Ok(format!("P {}\nQ {}", p, q))
        }
        Verb::Trace { input, what, method } => trace(&load(&input)?, what, method),
    }
}

fn key(t: &SkewTableau, side: Side, method: Method, out: Out) -> Outcome {
    require_kn(t)?;
    if !t.is_straight() {
        return Err(Failure::Invalid("keys need a straight tableau".into()));
    }
    let by_sjdt = || match side {
        Side::Right => right_key_sjdt(t),
        Side::Left => left_key_sjdt(t),
    };
    let by_direct = || match side {
        Side::Right => right_key_direct(t),
        Side::Left => left_key_direct(t),
    };
    let json = out == Out::Json;
    match method {
        Method::Sjdt => Ok(if json { by_sjdt()?.to_json().to_string() } else { by_sjdt()?.to_string() }),
        Method::Direct => {
            Ok(if json { by_direct()?.to_json().to_string() } else { by_direct()?.to_string() })
        }
        Method::Both => {
            let (a, b) = (by_sjdt()?, by_direct()?);
            let verdict = if a == b { "MATCH" } else { "MISMATCH" };
            let text = if json {
                serde_json::json!({ "sjdt": a.to_json(), "direct": b.to_json(), "verdict": verdict })
                    .to_string()
            } else {
                format!("sjdt   {}\ndirect {}\n{}", a, b, verdict)
            };
            if a == b {
                Ok(text)
            } else {
                Err(Failure::Mismatch(text))
            }
        }
    }
}

fn prefix(t: &SkewTableau, j: usize) -> Result<SkewTableau, Error> {
    SkewTableau::straight(t.n(), t.columns()[..=j].to_vec())
}

fn suffix(t: &SkewTableau, j: usize) -> Result<SkewTableau, Error> {
    SkewTableau::straight(t.n(), t.columns()[j..].to_vec())
}

/// Key column logs, one block per key column.
fn trace(t: &SkewTableau, what: Traced, method: Method) -> Outcome {
    let mut out: Vec<String> = Vec::new();
    if what == Traced::Rectify {
        let (r, steps) = rectify_traced(t)?;
        out.extend(steps.iter().map(|s| s.to_string()));
        out.push(r.to_string());
        return Ok(out.join("\n"));
    }
    require_kn(t)?;
    let k = t.num_columns();
    let sjdt = method != Method::Direct;
    let direct = method != Method::Sjdt;
    for j in 0..k {
        let (part, label) = match what {
            Traced::RightKey => (suffix(t, j)?, format!("right key column {}", j + 1)),
            _ => (prefix(t, j)?, format!("left key column {}", j + 1)),
        };
        out.push(format!("# {}", label));
        if sjdt {
            let seqs = match what {
                Traced::RightKey => right_key_swaps(&part)?,
                _ => left_key_swaps(&part)?,
            };
            for cols in seqs {
                out.push(format!("sjdt {}", SkewTableau::from_column_sequence(t.n(), cols)?));
            }
        }
        if direct {
            match what {
                Traced::RightKey => {
                    let (c, steps) = right_key_column_direct_traced(&part)?;
                    // steps are numbered within the suffix
                    out.extend(steps.into_iter().map(|mut s| {
                        s.column += j;
                        format!("direct {}", s)
                    }));
                    out.push(format!("result {}", c));
                }
                _ => {
                    let (c, steps) = left_key_column_direct_traced(&part)?;
                    out.extend(steps.iter().map(|s| format!("direct {}", s)));
                    out.push(format!("result {}", c));
                }
            }
        }
    }
    let key = match what {
        Traced::RightKey => right_key_direct(t)?,
        _ => left_key_direct(t)?,
    };
    out.push(format!("key {}", key));
    Ok(out.join("\n"))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{}", text);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(text) => {
            emit(text.trim_end());
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Rejected(msg)) => {
            emit(&msg);
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(text)) => {
            emit(&text);
            ExitCode::from(2)
        }
    }
}
