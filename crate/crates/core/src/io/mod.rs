//! Graph ingestion and result serialization.

mod edgelist;
mod gexf;
mod sweep;
mod table;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use gexf::{parse_gexf_minimal, GexfGraph};
pub use sweep::{read_sweep_csv, render_sweep_svg, write_sweep_csv};
pub use table::{format_significant, ResultTable};
