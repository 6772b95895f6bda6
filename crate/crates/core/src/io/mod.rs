//! Text and binary graph formats and the wood text format.

mod planar_code;
mod rot;
mod wood;

pub use planar_code::{read_planar_code, write_planar_code};
pub use rot::{read_rot, write_rot};
pub use wood::{read_wood, write_wood};

use crate::error::{Error, Result};
use crate::planar::EmbeddedPlanarGraph;

/// Input graph formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Rot,
    PlanarCode,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rot" => Ok(Format::Rot),
            "planar_code" => Ok(Format::PlanarCode),
            other => Err(Error::BadParams(format!("unknown format {other:?}"))),
        }
    }
}

/// Reads every graph in `bytes`; `.rot` input holds exactly one.
pub fn read_graphs(bytes: &[u8], format: Format) -> Result<Vec<EmbeddedPlanarGraph>> {
    match format {
        Format::Rot => {
            let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
                line: 0,
                msg: e.to_string(),
            })?;
            Ok(vec![read_rot(text)?])
        }
        Format::PlanarCode => read_planar_code(bytes),
    }
}

pub fn write_graph(g: &EmbeddedPlanarGraph, format: Format) -> Vec<u8> {
    match format {
        Format::Rot => write_rot(g).into_bytes(),
        Format::PlanarCode => write_planar_code(std::slice::from_ref(g)),
    }
}
