//! The result document of one command and its two renderings.

use serde::{Deserialize, Serialize};

use crate::spec::{BundleSpec, JsonInt, RationalText};

/// What the user asked for.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<RationalText>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VaEntry {
    pub a: Vec<u32>,
    pub rank: JsonInt,
    pub degree: JsonInt,
    pub slope_sum: RationalText,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub pieces: Vec<(JsonInt, JsonInt)>,
    pub r: i64,
    pub theta: RationalText,
    pub oracle: RationalText,
}

/// Command-specific results, tagged by the command name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Outcome {
    Theta {
        theta: RationalText,
        t: usize,
        s: u32,
        mu_t: RationalText,
        tail_rank: u32,
        tail_degree: JsonInt,
    },
    Classify {
        theta: RationalText,
        classification: String,
    },
    ConeGr {
        theta: RationalText,
        p_delta: JsonInt,
        rays: Vec<Vec<JsonInt>>,
    },
    ConeFlag {
        thetas: Vec<RationalText>,
        p_delta: JsonInt,
        rays: Vec<Vec<JsonInt>>,
    },
    MemberGr {
        nef: bool,
        ample: bool,
        rays: Vec<Vec<JsonInt>>,
    },
    MemberFlag {
        nef: bool,
        ample: bool,
        rays: Vec<Vec<JsonInt>>,
    },
    Vabundles {
        theta: RationalText,
        bundles: Vec<VaEntry>,
    },
    OracleCheck {
        cases: u64,
        agree: bool,
        mismatches: Vec<Mismatch>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(flatten)]
    pub outcome: Outcome,
    pub input: InputEcho,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Text,
    Json,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn command_name(&self) -> &'static str {
        match self.outcome {
            Outcome::Theta { .. } => "theta",
            Outcome::Classify { .. } => "classify",
            Outcome::ConeGr { .. } => "cone gr",
            Outcome::ConeFlag { .. } => "cone flag",
            Outcome::MemberGr { .. } => "member gr",
            Outcome::MemberFlag { .. } => "member flag",
            Outcome::Vabundles { .. } => "vabundles",
            Outcome::OracleCheck { .. } => "oracle-check",
        }
    }
}

pub fn render_report(rep: &Report, mode: RenderMode) -> String {
    match mode {
        RenderMode::Json => {
            let mut s = rep.to_json();
            s.push('\n');
            s
        }
        RenderMode::Text => render_text(rep),
    }
}

/// `(0,1), (1,-1)`
pub fn format_rays(rays: &[Vec<JsonInt>]) -> String {
    rays.iter()
        .map(|r| {
            let inner: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("({})", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn render_text(rep: &Report) -> String {
    let mut rows: Vec<(String, String)> = vec![("command".into(), rep.command_name().into())];
    let input = &rep.input;
    if let Some(b) = &input.bundle {
        if let Some(p) = &b.pieces {
            let v: Vec<String> = p.iter().map(|(r, d)| format!("({r}, {d})")).collect();
            rows.push(("pieces".into(), format!("[{}]", v.join(", "))));
        }
        if let Some(s) = &b.splitting {
            rows.push(("splitting".into(), format!("[{}]", join(s))));
        }
        let field = match (b.field.characteristic, b.field.frobenius_steps) {
            (0, _) => "char 0".to_string(),
            (p, d) => format!("char {p}, frobenius steps {}", d.unwrap_or(0)),
        };
        rows.push(("field".into(), field));
    }
    if let Some(r) = input.r {
        rows.push(("r".into(), r.to_string()));
    }
    if let Some(f) = &input.flag {
        rows.push(("flag".into(), join(f)));
    }
    if let Some(c) = &input.class {
        rows.push(("class".into(), format!("({})", c.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))));
    }
    match &rep.outcome {
        Outcome::Theta {
            theta,
            t,
            s,
            mu_t,
            tail_rank,
            tail_degree,
        } => {
            rows.push(("t".into(), t.to_string()));
            rows.push(("s".into(), s.to_string()));
            rows.push(("mu_t".into(), mu_t.to_string()));
            rows.push(("tail_rank".into(), tail_rank.to_string()));
            rows.push(("tail_degree".into(), tail_degree.to_string()));
            rows.push(("theta".into(), theta.to_string()));
        }
        Outcome::Classify {
            theta,
            classification,
        } => {
            rows.push(("theta".into(), theta.to_string()));
            rows.push(("classification".into(), classification.clone()));
        }
        Outcome::ConeGr { theta, p_delta, rays } => {
            rows.push(("theta".into(), theta.to_string()));
            rows.push(("p_delta".into(), p_delta.to_string()));
            rows.push(("rays".into(), format_rays(rays)));
        }
        Outcome::ConeFlag {
            thetas,
            p_delta,
            rays,
        } => {
            rows.push(("thetas".into(), join(thetas)));
            rows.push(("p_delta".into(), p_delta.to_string()));
            rows.push(("rays".into(), format_rays(rays)));
        }
        Outcome::MemberGr { nef, ample, rays } | Outcome::MemberFlag { nef, ample, rays } => {
            rows.push(("rays".into(), format_rays(rays)));
            rows.push(("nef".into(), nef.to_string()));
            rows.push(("ample".into(), ample.to_string()));
        }
        Outcome::Vabundles { theta, bundles } => {
            rows.push(("theta".into(), theta.to_string()));
            for b in bundles {
                rows.push((
                    format!("V{:?}", b.a),
                    format!("rank {}  degree {}  slope {}", b.rank, b.degree, b.slope_sum),
                ));
            }
        }
        Outcome::OracleCheck {
            cases,
            agree,
            mismatches,
        } => {
            rows.push(("cases".into(), cases.to_string()));
            rows.push(("agree".into(), agree.to_string()));
            for m in mismatches {
                let p: Vec<String> = m.pieces.iter().map(|(r, d)| format!("({r}, {d})")).collect();
                rows.push((
                    "mismatch".into(),
                    format!("[{}] r={} theta={} oracle={}", p.join(", "), m.r, m.theta, m.oracle),
                ));
            }
        }
    }
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}
