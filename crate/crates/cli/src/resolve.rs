//! Turns a parsed document into library names. Every reference, type and
//! space is checked here, before any task runs.

use std::collections::HashMap;

use cgframe::gallery::{ColumnLowerU, NormOracle, ToeplitzLowerU, ToeplitzUpperU};
use cgframe::gframes::{block_gframe, AtomFrame, GFrameBundle};
use cgframe::hilbert::{FiniteCombo, SpaceDescriptor, VectorName};
use cgframe::realcore::SpeckerData;
use num_traits::Signed;

use crate::spec::{GFrameKind, GalleryKind, Gate, OpKind, Payload, SpecDocument, TaskDecl};
use crate::CliError;

#[derive(Clone)]
pub struct GalleryObject {
    pub kind: GalleryKind,
    pub space: SpaceDescriptor,
    pub data: SpeckerData,
    pub gate: Option<NormOracle>,
}

#[derive(Clone)]
pub enum Object {
    Vector(VectorName),
    GFrame(GFrameBundle),
    Gallery(GalleryObject),
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Vector(_) => "vector",
            Object::GFrame(_) => "gframe",
            Object::Gallery(_) => "gallery object",
        }
    }

    fn space(&self) -> &SpaceDescriptor {
        match self {
            Object::Vector(v) => v.space(),
            Object::GFrame(b) => b.gframe.dom(),
            Object::Gallery(g) => &g.space,
        }
    }
}

/// A task with its arguments resolved.
#[derive(Clone)]
pub struct Task {
    pub index: usize,
    pub decl: TaskDecl,
    pub args: Vec<Arg>,
}

#[derive(Clone)]
pub enum Arg {
    Object(Object),
    Index(usize),
}

fn resolve_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Resolve { line, msg: msg.into() }
}

fn at_line<T>(line: usize, r: cgframe::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| resolve_err(line, e.to_string()))
}

pub struct Env {
    spaces: HashMap<String, SpaceDescriptor>,
    objects: HashMap<String, Object>,
}

impl Env {
    pub fn build(doc: &SpecDocument) -> Result<Env, CliError> {
        let mut env = Env {
            spaces: HashMap::new(),
            objects: HashMap::new(),
        };
        for (i, s) in doc.spaces.iter().enumerate() {
            // ids follow declaration order, so reports are reproducible
            let id = i as u64 + 1;
            let d = match s.dim {
                None => SpaceDescriptor::l2(id),
                Some(0) => return Err(resolve_err(s.line, "a space needs positive dimension")),
                Some(n) => SpaceDescriptor::finite(id, n),
            };
            if env.spaces.insert(s.name.clone(), d).is_some() {
                return Err(resolve_err(s.line, format!("space `{}` declared twice", s.name)));
            }
        }
        for o in &doc.objects {
            let space = env
                .spaces
                .get(&o.space)
                .cloned()
                .ok_or_else(|| resolve_err(o.line, format!("unknown space `{}`", o.space)))?;
            let obj = match &o.payload {
                Payload::Vector(entries) => Object::Vector(at_line(
                    o.line,
                    VectorName::constant(&space, FiniteCombo::from_pairs(entries.clone())),
                )?),
                Payload::GFrame(kind) => Object::GFrame(at_line(o.line, gframe(&space, kind))?),
                Payload::Gallery { kind, exponents, gate } => {
                    let data = at_line(o.line, SpeckerData::finite(exponents.clone()))?;
                    let gate = match gate {
                        Gate::Absent => None,
                        Gate::Exact => Some(at_line(o.line, NormOracle::exact(&data))?),
                        Gate::Value(q) if q.is_negative() => {
                            return Err(resolve_err(o.line, "a gate is a squared norm and cannot be negative"))
                        }
                        Gate::Value(q) => Some(NormOracle::from_rational(q.clone())),
                    };
                    let g = GalleryObject {
                        kind: *kind,
                        space,
                        data,
                        gate,
                    };
                    // constructs the operator once to validate the space
                    at_line(o.line, g.check())?;
                    Object::Gallery(g)
                }
            };
            if env.spaces.contains_key(&o.name) || env.objects.insert(o.name.clone(), obj).is_some() {
                return Err(resolve_err(o.line, format!("name `{}` declared twice", o.name)));
            }
        }
        Ok(env)
    }

    fn object(&self, t: &TaskDecl, name: &str) -> Result<Object, CliError> {
        self.objects
            .get(name)
            .cloned()
            .ok_or_else(|| resolve_err(t.line, format!("unknown object `{name}`")))
    }

    pub fn task(&self, index: usize, t: &TaskDecl) -> Result<Task, CliError> {
        use OpKind::*;
        let want: &[&str] = match t.op {
            VecNorm | Vector => &["vector"],
            Inner => &["vector", "vector"],
            Coefficient => &["vector", "index"],
            Analysis | FrameOperator | InverseFrameOperator | Reconstruct | PseudoInverse | CanonicalDual => {
                &["gframe", "vector"]
            }
            Apply | Gated | Tau | Remark => &["gallery object", "vector"],
        };
        let mut args = Vec::new();
        for (a, &w) in t.args.iter().zip(want) {
            if w == "index" {
                let k = a
                    .parse()
                    .map_err(|_| resolve_err(t.line, format!("`{a}` is not a basis index")))?;
                args.push(Arg::Index(k));
                continue;
            }
            let o = self.object(t, a)?;
            if o.kind() != w {
                return Err(resolve_err(
                    t.line,
                    format!("`{a}` is a {}, `{}` expects a {w}", o.kind(), t.name),
                ));
            }
            args.push(Arg::Object(o));
        }
        let spaces: Vec<&SpaceDescriptor> = args
            .iter()
            .filter_map(|a| match a {
                Arg::Object(o) => Some(o.space()),
                Arg::Index(_) => None,
            })
            .collect();
        if let [first, rest @ ..] = spaces.as_slice() {
            for s in rest {
                first.ensure_same(s).map_err(|e| resolve_err(t.line, e.to_string()))?;
            }
        }
        if let Some(Arg::Object(Object::Gallery(g))) = args.first() {
            if t.op == Tau && g.kind != GalleryKind::UpperToeplitz {
                return Err(resolve_err(t.line, "`tau` is defined for upper-toeplitz data only"));
            }
            if matches!(t.op, Gated | Tau | Remark) && g.gate.is_none() {
                return Err(resolve_err(
                    t.line,
                    format!(
                        "`{}` needs a gate, and `{}` was declared with gate=none",
                        t.name, t.args[0]
                    ),
                ));
            }
        }
        Ok(Task {
            index,
            decl: t.clone(),
            args,
        })
    }
}

fn gframe(space: &SpaceDescriptor, kind: &GFrameKind) -> cgframe::Result<GFrameBundle> {
    match kind {
        GFrameKind::Parseval => AtomFrame::parseval(space).bundle(),
        GFrameKind::Redundant => AtomFrame::redundant(space).bundle(),
        GFrameKind::Weighted(w) => AtomFrame::weighted(space, w.clone()).bundle(),
        GFrameKind::Block(d) => block_gframe(space, *d),
        GFrameKind::Atoms { atoms, tail, a, b } => AtomFrame {
            space: space.clone(),
            atoms: atoms
                .iter()
                .map(|c| FiniteCombo::from_pairs(c.iter().cloned().enumerate()))
                .collect(),
            tail_from: *tail,
            a: a.clone(),
            b: b.clone(),
        }
        .bundle(),
    }
}

impl GalleryObject {
    pub fn upper(&self) -> cgframe::Result<ToeplitzUpperU> {
        ToeplitzUpperU::new(&self.space, self.data.clone())
    }

    pub fn column(&self) -> cgframe::Result<ColumnLowerU> {
        ColumnLowerU::new(&self.space, self.data.clone())
    }

    pub fn lower(&self) -> cgframe::Result<ToeplitzLowerU> {
        ToeplitzLowerU::new(&self.space, self.data.clone())
    }

    fn check(&self) -> cgframe::Result<()> {
        match self.kind {
            GalleryKind::UpperToeplitz => self.upper().map(drop),
            GalleryKind::ColumnLower => self.column().map(drop),
            GalleryKind::LowerToeplitz => self.lower().map(drop),
        }
    }
}
