//! Run the HTTP service.
//!
//! ```text
//! cargo run -p json-taxonomy --example serve -- --port 8080 --asset-dir ./ui/dist
//! curl -s --data-binary @document.json localhost:8080/api/analyze
//! ```
//!
//! Every flag can also be set through `JSON_TAXONOMY_HOST`, `JSON_TAXONOMY_PORT`,
//! `JSON_TAXONOMY_ASSET_DIR` and `JSON_TAXONOMY_BODY_LIMIT`.

use clap::Parser;
use json_taxonomy::service::{serve, ServiceConfig};

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let config = ServiceConfig::parse();
    eprintln!("listening on http://{}:{}", config.host, config.port);
    serve(config).await
}
