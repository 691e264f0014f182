use std::fs;
use std::path::Path;

use twohop_core::graph::GraphJson;
use twohop_core::{generate, DemandVector, Error, Family, NetworkGraph, Result};

/// A graph argument: a JSON file (`{"vertices": [...], "edges": [[a, b], ...]}`)
/// or a generator shorthand. Naming both at once is rejected.
pub fn load_graph(arg: &str) -> Result<NetworkGraph> {
    let is_file = Path::new(arg).is_file();
    let family = arg.parse::<Family>();
    match (is_file, family) {
        (true, Ok(_)) => Err(Error::input(format!(
            "{arg:?} is both an existing file and a generator shorthand; rename the file or pass ./{arg}"
        ))),
        (true, Err(_)) => {
            let text = fs::read_to_string(arg).map_err(|e| Error::input(format!("cannot read graph file {arg:?}: {e}")))?;
            let json: GraphJson =
                serde_json::from_str(&text).map_err(|e| Error::input(format!("malformed graph JSON in {arg:?}: {e}")))?;
            NetworkGraph::from_json(&json)
        }
        (false, Ok(f)) => generate(&f),
        (false, Err(e)) => Err(Error::input(format!("{arg:?} is neither a readable file nor a valid generator ({e})"))),
    }
}

/// `--demands`: inline JSON when it starts with `{`, otherwise a file path.
pub fn load_demands(g: &NetworkGraph, arg: &str) -> Result<DemandVector> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg)
            .map_err(|e| Error::input(format!("cannot read demands file {arg:?}: {e}")))?
    };
    DemandVector::from_json(g, &text).map_err(|e| Error::input(format!("demands {arg:?}: {e}")))
}
