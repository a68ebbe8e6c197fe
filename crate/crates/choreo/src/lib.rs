//! The `choreo` command-line tool and its JSON file formats, built on
//! `choreo-core`.

pub mod cli;
pub mod commands;
pub mod init;
pub mod io;
pub mod report;
pub mod svg;
