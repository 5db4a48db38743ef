//! File formats, JSON reports, corpus files and the command-line front end for
//! `atomwidth-core`.

pub mod cli;
pub mod corpus;
pub mod expr;
pub mod formats;
pub mod report;
