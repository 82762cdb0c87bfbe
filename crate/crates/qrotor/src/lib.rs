//! File formats, reports and the command-line driver for the q-deformed
//! rotor. The numerics live in [`qrotor_core`].

pub mod cli;
pub mod ingest;
pub mod report;
pub mod verify;

pub use ingest::{
    parse_band, parse_band_file, read_band_file, write_band_file, BandFile, IngestError, ParseError,
};
pub use report::{
    emit_plot_data, write_json, write_report, write_table, BandReport, Report, ReportError,
};
