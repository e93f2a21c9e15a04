//! The text format of a spec document.
//!
//! One directive per line; `#` starts a comment. A directive is a keyword,
//! positional words and `key=value` pairs:
//!
//! ```text
//! version 1
//! space H dim=inf
//! vector v H 3/5 4/5
//! vector w H 0:1 7:-1/2
//! gframe P parseval H
//! gframe W weighted H 2 1/3
//! gframe R redundant H
//! gframe K block H 3
//! gframe Q atoms F a=1/3 b=3 atom=1,1 atom=0,1
//! gallery U upper-toeplitz H data=1,3 gate=exact
//! task vec_norm v precision=20
//! ```
//!
//! All numbers are exact rationals matching `-?[0-9]+(/[1-9][0-9]*)?`;
//! decimal and exponent notation is rejected.

use cgframe::realcore::{self, Rational};

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub struct SpecDocument {
    pub version: String,
    pub spaces: Vec<SpaceDecl>,
    pub objects: Vec<ObjectDecl>,
    pub tasks: Vec<TaskDecl>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpaceDecl {
    pub line: usize,
    pub name: String,
    /// `None` for `l2`.
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObjectDecl {
    pub line: usize,
    pub name: String,
    pub space: String,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Vector(Vec<(usize, Rational)>),
    GFrame(GFrameKind),
    Gallery {
        kind: GalleryKind,
        exponents: Vec<u64>,
        gate: Gate,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum GFrameKind {
    Parseval,
    Redundant,
    Weighted(Vec<Rational>),
    Block(usize),
    /// Explicit dense atoms, optionally followed by `e_t, e_{t+1}, ...`.
    Atoms {
        atoms: Vec<Vec<Rational>>,
        tail: Option<usize>,
        a: Rational,
        b: Rational,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GalleryKind {
    UpperToeplitz,
    ColumnLower,
    LowerToeplitz,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Gate {
    /// The exact norm of the finitely truncated data.
    Exact,
    /// No norm datum; gated operations cannot run.
    Absent,
    Value(Rational),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    VecNorm,
    Inner,
    Coefficient,
    Vector,
    Analysis,
    FrameOperator,
    InverseFrameOperator,
    Reconstruct,
    PseudoInverse,
    CanonicalDual,
    Apply,
    Gated,
    Tau,
    Remark,
}

impl OpKind {
    const ALL: [(&'static str, OpKind, usize); 15] = [
        ("vec_norm", OpKind::VecNorm, 1),
        ("inner", OpKind::Inner, 2),
        ("coefficient", OpKind::Coefficient, 2),
        ("vector", OpKind::Vector, 1),
        ("analysis", OpKind::Analysis, 2),
        ("frame_operator", OpKind::FrameOperator, 2),
        ("inverse_frame_operator", OpKind::InverseFrameOperator, 2),
        ("reconstruct", OpKind::Reconstruct, 2),
        ("pseudo_inverse", OpKind::PseudoInverse, 2),
        ("canonical_dual", OpKind::CanonicalDual, 2),
        ("apply", OpKind::Apply, 2),
        ("gated", OpKind::Gated, 2),
        ("gated_adjoint", OpKind::Gated, 2),
        ("tau", OpKind::Tau, 2),
        ("remark", OpKind::Remark, 2),
    ];

    fn lookup(name: &str) -> Option<(OpKind, usize)> {
        Self::ALL.iter().find(|(n, _, _)| *n == name).map(|&(_, k, a)| (k, a))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TaskDecl {
    pub line: usize,
    /// The operation name as written.
    pub name: String,
    pub op: OpKind,
    pub args: Vec<String>,
    pub precision: Option<u32>,
    /// Number of components printed for results in a direct sum.
    pub count: Option<usize>,
}

struct Line<'a> {
    no: usize,
    keyword: &'a str,
    words: Vec<&'a str>,
    keys: Vec<(&'a str, &'a str)>,
}

impl<'a> Line<'a> {
    fn err(&self, msg: impl Into<String>) -> CliError {
        CliError::Parse {
            line: self.no,
            msg: msg.into(),
        }
    }

    fn key(&self, k: &str) -> Result<Option<&'a str>, CliError> {
        let mut found = self.keys.iter().filter(|(key, _)| *key == k);
        let first = found.next().map(|(_, v)| *v);
        if found.next().is_some() {
            return Err(self.err(format!("key `{k}` given twice")));
        }
        Ok(first)
    }

    fn allow_keys(&self, allowed: &[&str]) -> Result<(), CliError> {
        match self.keys.iter().find(|(k, _)| !allowed.contains(k)) {
            Some((k, _)) => Err(self.err(format!("unknown key `{k}` for `{}`", self.keyword))),
            None => Ok(()),
        }
    }

    fn words(&self, min: usize, max: usize) -> Result<(), CliError> {
        let n = self.words.len();
        if n < min || n > max {
            let want = if min == max {
                min.to_string()
            } else {
                format!("{min} to {max}")
            };
            return Err(self.err(format!("`{}` takes {want} words, found {n}", self.keyword)));
        }
        Ok(())
    }

    fn rational(&self, s: &str) -> Result<Rational, CliError> {
        parse_rational(s).map_err(|m| self.err(m))
    }

    fn integer<T: std::str::FromStr>(&self, s: &str, what: &str) -> Result<T, CliError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.err(format!("{what} must be a nonnegative integer, found `{s}`")));
        }
        s.parse().map_err(|_| self.err(format!("{what} `{s}` is too large")))
    }

    fn list<T>(&self, s: &str, f: impl Fn(&str) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
        if s.is_empty() {
            return Ok(Vec::new());
        }
        s.split(',').map(f).collect()
    }
}

/// The library parser, with a pointed message for floating-point input.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let looks_float = s.contains(['.', 'e', 'E']) || s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("nan");
    if looks_float {
        return Err(format!(
            "`{s}` is not an exact rational; floating-point literals are rejected (write e.g. 3/10)"
        ));
    }
    realcore::parse_rational(s).map_err(|_| format!("`{s}` is not a rational of the form -?[0-9]+(/[1-9][0-9]*)?"))
}

fn tokenize(no: usize, text: &str) -> Option<Line<'_>> {
    let text = text.split('#').next().unwrap_or("");
    let mut it = text.split_whitespace();
    let keyword = it.next()?;
    let (mut words, mut keys) = (Vec::new(), Vec::new());
    for tok in it {
        match tok.split_once('=') {
            Some(kv) => keys.push(kv),
            None => words.push(tok),
        }
    }
    Some(Line {
        no,
        keyword,
        words,
        keys,
    })
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut doc = SpecDocument {
            version: String::new(),
            spaces: Vec::new(),
            objects: Vec::new(),
            tasks: Vec::new(),
        };
        for (i, raw) in text.lines().enumerate() {
            let Some(line) = tokenize(i + 1, raw) else { continue };
            if doc.version.is_empty() && line.keyword != "version" {
                return Err(line.err("the first directive must be `version 1`"));
            }
            match line.keyword {
                "version" => {
                    line.words(1, 1)?;
                    line.allow_keys(&[])?;
                    if !doc.version.is_empty() {
                        return Err(line.err("version given twice"));
                    }
                    if line.words[0] != "1" {
                        return Err(line.err(format!("unsupported version `{}`", line.words[0])));
                    }
                    doc.version = line.words[0].to_string();
                }
                "space" => doc.spaces.push(parse_space(&line)?),
                "vector" => doc.objects.push(parse_vector(&line)?),
                "gframe" => doc.objects.push(parse_gframe(&line)?),
                "gallery" => doc.objects.push(parse_gallery(&line)?),
                "task" => doc.tasks.push(parse_task(&line)?),
                other => return Err(line.err(format!("unknown directive `{other}`"))),
            }
        }
        if doc.version.is_empty() {
            return Err(CliError::Parse {
                line: 0,
                msg: "empty document: expected `version 1`".into(),
            });
        }
        Ok(doc)
    }
}

fn parse_space(line: &Line) -> Result<SpaceDecl, CliError> {
    line.words(1, 1)?;
    line.allow_keys(&["dim"])?;
    let dim = match line.key("dim")? {
        None | Some("inf") => None,
        Some(d) => Some(line.integer(d, "dim")?),
    };
    Ok(SpaceDecl {
        line: line.no,
        name: line.words[0].to_string(),
        dim,
    })
}

fn parse_vector(line: &Line) -> Result<ObjectDecl, CliError> {
    if line.words.len() < 2 {
        return Err(line.err("`vector` takes a name, a space and coordinates"));
    }
    line.allow_keys(&[])?;
    let coords = &line.words[2..];
    let sparse = coords.iter().any(|c| c.contains(':'));
    let mut entries = Vec::new();
    for (k, c) in coords.iter().enumerate() {
        let entry = match (sparse, c.split_once(':')) {
            (true, Some((idx, val))) => (line.integer(idx, "basis index")?, line.rational(val)?),
            (true, None) => return Err(line.err("mix of dense and index:value coordinates")),
            (false, _) => (k, line.rational(c)?),
        };
        entries.push(entry);
    }
    Ok(ObjectDecl {
        line: line.no,
        name: line.words[0].to_string(),
        space: line.words[1].to_string(),
        payload: Payload::Vector(entries),
    })
}

fn parse_gframe(line: &Line) -> Result<ObjectDecl, CliError> {
    if line.words.len() < 3 {
        return Err(line.err("`gframe` takes a name, a kind and a space"));
    }
    let rest = &line.words[3..];
    let kind = match line.words[1] {
        "parseval" | "redundant" => {
            line.words(3, 3)?;
            line.allow_keys(&[])?;
            if line.words[1] == "parseval" {
                GFrameKind::Parseval
            } else {
                GFrameKind::Redundant
            }
        }
        "weighted" => {
            line.allow_keys(&[])?;
            let w = rest.iter().map(|s| line.rational(s)).collect::<Result<Vec<_>, _>>()?;
            if w.is_empty() {
                return Err(line.err("weighted g-frame needs at least one weight"));
            }
            GFrameKind::Weighted(w)
        }
        "block" => {
            line.words(4, 4)?;
            line.allow_keys(&[])?;
            GFrameKind::Block(line.integer(rest[0], "block size")?)
        }
        "atoms" => {
            line.words(3, 3)?;
            line.allow_keys(&["a", "b", "atom", "tail"])?;
            let bound = |k| -> Result<Rational, CliError> {
                let v = line
                    .key(k)?
                    .ok_or_else(|| line.err(format!("atoms g-frame needs `{k}=`")))?;
                line.rational(v)
            };
            let (a, b) = (bound("a")?, bound("b")?);
            let atoms = line
                .keys
                .iter()
                .filter(|(k, _)| *k == "atom")
                .map(|(_, v)| line.list(v, |s| line.rational(s)))
                .collect::<Result<Vec<_>, _>>()?;
            let tail = line.key("tail")?.map(|t| line.integer(t, "tail")).transpose()?;
            GFrameKind::Atoms { atoms, tail, a, b }
        }
        other => return Err(line.err(format!("unknown g-frame kind `{other}`"))),
    };
    Ok(ObjectDecl {
        line: line.no,
        name: line.words[0].to_string(),
        space: line.words[2].to_string(),
        payload: Payload::GFrame(kind),
    })
}

fn parse_gallery(line: &Line) -> Result<ObjectDecl, CliError> {
    line.words(3, 3)?;
    line.allow_keys(&["data", "gate"])?;
    let kind = match line.words[1] {
        "upper-toeplitz" => GalleryKind::UpperToeplitz,
        "column-lower" => GalleryKind::ColumnLower,
        "lower-toeplitz" => GalleryKind::LowerToeplitz,
        other => return Err(line.err(format!("unknown gallery kind `{other}`"))),
    };
    let exponents = line.list(line.key("data")?.unwrap_or(""), |s| line.integer(s, "exponent"))?;
    let gate = match line.key("gate")? {
        None | Some("none") => Gate::Absent,
        Some("exact") => Gate::Exact,
        Some(v) => Gate::Value(line.rational(v)?),
    };
    Ok(ObjectDecl {
        line: line.no,
        name: line.words[0].to_string(),
        space: line.words[2].to_string(),
        payload: Payload::Gallery { kind, exponents, gate },
    })
}

fn parse_task(line: &Line) -> Result<TaskDecl, CliError> {
    line.allow_keys(&["precision", "count"])?;
    let Some((&name, args)) = line.words.split_first() else {
        return Err(line.err("`task` needs an operation"));
    };
    let (op, arity) = OpKind::lookup(name).ok_or_else(|| line.err(format!("unknown operation `{name}`")))?;
    if args.len() != arity {
        return Err(line.err(format!("`{name}` takes {arity} arguments, found {}", args.len())));
    }
    Ok(TaskDecl {
        line: line.no,
        name: name.to_string(),
        op,
        args: args.iter().map(|s| s.to_string()).collect(),
        precision: line
            .key("precision")?
            .map(|p| line.integer(p, "precision"))
            .transpose()?,
        count: line.key("count")?.map(|c| line.integer(c, "count")).transpose()?,
    })
}
