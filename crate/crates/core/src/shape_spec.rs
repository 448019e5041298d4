//! Textual shape descriptions.
//!
//! JSON, tagged by `"type"`:
//!
//! ```json
//! {"type": "reuleaux-regular", "n": 5}
//! {"type": "reuleaux-angles", "angles": [1.0471975511965976, 1.0471975511965976, 1.0471975511965976]}
//! {"type": "reuleaux-random", "n": 7, "seed": 42}
//! {"type": "disk-polygon", "radius": 1.0, "centers": [[0, 0], [1, 0]]}
//! ```
//!
//! An untagged `{"radius": .., "centers": [..]}` object is read as a
//! disk-polygon. The inline forms are `regular:N`, `triangle`,
//! `angles:a,b,c,..`, `random:N:SEED` and `disk:R:x,y;x,y;..`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::disk_polygon::{build_intersection, DiskPolygon, DiskPolygonJson};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::reuleaux::{AngleSequence, ReuleauxPolygon};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ShapeSpec {
    ReuleauxRegular {
        n: usize,
    },
    #[serde(alias = "reuleaux")]
    ReuleauxAngles {
        angles: Vec<f64>,
    },
    ReuleauxRandom {
        n: usize,
        seed: u64,
    },
    DiskPolygon {
        radius: f64,
        centers: Vec<Point2>,
    },
}

#[derive(Debug, Clone)]
pub enum Shape {
    Reuleaux(ReuleauxPolygon),
    Disk(DiskPolygon),
}

impl Shape {
    pub fn polygon(&self) -> &DiskPolygon {
        match self {
            Self::Reuleaux(r) => r.underlying(),
            Self::Disk(d) => d,
        }
    }

    pub fn reuleaux(&self) -> Option<&ReuleauxPolygon> {
        match self {
            Self::Reuleaux(r) => Some(r),
            Self::Disk(_) => None,
        }
    }
}

impl ShapeSpec {
    /// Reads JSON if the text starts with `{`, the inline syntax otherwise.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_inline(text)
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::InvalidShapeSpec(e.to_string()))?;
        if value.get("type").is_none() {
            let plain: DiskPolygonJson = serde_json::from_value(value)
                .map_err(|e| Error::InvalidShapeSpec(e.to_string()))?;
            return Ok(Self::DiskPolygon {
                radius: plain.radius,
                centers: plain.centers,
            });
        }
        serde_json::from_value(value).map_err(|e| Error::InvalidShapeSpec(e.to_string()))
    }

    pub fn from_inline(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidShapeSpec(format!("{why} in '{text}'"));
        let (kind, rest) = text.split_once(':').unwrap_or((text, ""));
        match kind {
            "triangle" if rest.is_empty() => Ok(Self::ReuleauxRegular { n: 3 }),
            "regular" => Ok(Self::ReuleauxRegular {
                n: rest.trim().parse().map_err(|_| bad("bad order"))?,
            }),
            "angles" => Ok(Self::ReuleauxAngles {
                angles: parse_list(rest).ok_or_else(|| bad("bad angle list"))?,
            }),
            "random" => {
                let (n, seed) = rest
                    .split_once(':')
                    .ok_or_else(|| bad("expected random:N:SEED"))?;
                Ok(Self::ReuleauxRandom {
                    n: n.trim().parse().map_err(|_| bad("bad order"))?,
                    seed: seed.trim().parse().map_err(|_| bad("bad seed"))?,
                })
            }
            "disk" => {
                let (radius, centers) = rest
                    .split_once(':')
                    .ok_or_else(|| bad("expected disk:R:x,y;.."))?;
                let radius = radius
                    .trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|r| r.is_finite())
                    .ok_or_else(|| bad("bad radius"))?;
                let centers = centers
                    .split(';')
                    .map(|pair| match parse_list(pair)?.as_slice() {
                        &[x, y] => Some(Point2::new(x, y)),
                        _ => None,
                    })
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| bad("bad center list"))?;
                Ok(Self::DiskPolygon { radius, centers })
            }
            _ => Err(bad("unknown shape kind")),
        }
    }

    pub fn build(&self) -> Result<Shape> {
        match self {
            Self::ReuleauxRegular { n } => Ok(Shape::Reuleaux(ReuleauxPolygon::regular(*n)?)),
            Self::ReuleauxAngles { angles } => {
                let seq = AngleSequence::new(angles.clone())?;
                Ok(Shape::Reuleaux(ReuleauxPolygon::from_angles(&seq)?))
            }
            Self::ReuleauxRandom { n, seed } => {
                Ok(Shape::Reuleaux(ReuleauxPolygon::random(*n, *seed)?))
            }
            Self::DiskPolygon { radius, centers } => {
                Ok(Shape::Disk(build_intersection(centers, *radius)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("shape spec serializes")
    }
}

impl FromStr for ShapeSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn parse_list(text: &str) -> Option<Vec<f64>> {
    text.split(',')
        .map(|v| v.trim().parse::<f64>().ok().filter(|x| x.is_finite()))
        .collect()
}
