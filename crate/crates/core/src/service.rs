//! HTTP front end for the analyzer.
//!
//! | Method & path          | Response                                             |
//! |------------------------|------------------------------------------------------|
//! | `POST /api/analyze`    | 200 report JSON, 422 `{"error":{message,line,column}}`, 413 over the body limit |
//! | `GET/HEAD /api/health` | 200 `{"status":"ok","schemaVersion":1}`              |
//! | anything else under `/`| static files from the configured asset directory     |
//!
//! The request body of `/api/analyze` is taken as raw bytes so that invalid
//! documents reach the parser and come back as structured 422s. Other methods
//! on the API routes get 405. CORS is open for GET/POST on `/api/*`.

use std::io;
use std::net::SocketAddr;
use std::path::PathBuf;

use axum::body::Bytes;
use axum::extract::DefaultBodyLimit;
use axum::http::{header, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Serialize;
use tokio::net::TcpListener;
use tower_http::cors::{Any, CorsLayer};
use tower_http::services::ServeDir;

use crate::parse::ParseFailure;
use crate::report::{build_report, serialize_report, SCHEMA_VERSION};

pub const DEFAULT_PORT: u16 = 8080;
pub const DEFAULT_BODY_LIMIT: usize = 10 * 1024 * 1024;

/// Service settings, read from flags or `JSON_TAXONOMY_*` environment variables.
#[derive(Debug, Clone, PartialEq, Eq, clap::Parser)]
#[command(
    name = "json-taxonomy-service",
    about = "Serve the JSON taxonomy analyzer over HTTP"
)]
pub struct ServiceConfig {
    /// Address to bind
    #[arg(long, env = "JSON_TAXONOMY_HOST", default_value = "127.0.0.1")]
    pub host: String,

    /// Port to listen on
    #[arg(long, env = "JSON_TAXONOMY_PORT", default_value_t = DEFAULT_PORT)]
    pub port: u16,

    /// Directory of static UI assets served at `/`
    #[arg(long, env = "JSON_TAXONOMY_ASSET_DIR")]
    pub asset_dir: Option<PathBuf>,

    /// Largest accepted request body, in bytes
    #[arg(long, env = "JSON_TAXONOMY_BODY_LIMIT", default_value_t = DEFAULT_BODY_LIMIT)]
    pub body_limit: usize,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        ServiceConfig {
            host: "127.0.0.1".to_string(),
            port: DEFAULT_PORT,
            asset_dir: None,
            body_limit: DEFAULT_BODY_LIMIT,
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    error: &'a ParseFailure,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Health {
    status: &'static str,
    schema_version: u32,
}

/// Body returned by `POST /api/analyze` for a valid document. Identical to
/// the CLI's `--report` output.
pub fn report_body(input: &[u8]) -> Result<String, ParseFailure> {
    let document = crate::parse(input)?;
    let mut body = serialize_report(&build_report(document.root()));
    body.push('\n');
    Ok(body)
}

async fn analyze(body: Bytes) -> Response {
    match report_body(&body) {
        Ok(report) => ([(header::CONTENT_TYPE, "application/json")], report).into_response(),
        Err(failure) => (
            StatusCode::UNPROCESSABLE_ENTITY,
            Json(ErrorBody { error: &failure }),
        )
            .into_response(),
    }
}

async fn health() -> Json<Health> {
    Json(Health {
        status: "ok",
        schema_version: SCHEMA_VERSION,
    })
}

pub fn router(config: &ServiceConfig) -> Router {
    let cors = CorsLayer::new()
        .allow_origin(Any)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE]);

    let api = Router::new()
        .route("/api/analyze", post(analyze))
        .route("/api/health", get(health))
        .layer(DefaultBodyLimit::max(config.body_limit))
        .layer(cors);

    match &config.asset_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

/// Serves on an already-bound listener until the future is dropped.
pub async fn serve_on(listener: TcpListener, config: &ServiceConfig) -> io::Result<()> {
    axum::serve(listener, router(config)).await
}

/// Binds `host:port` and serves until Ctrl-C.
pub async fn serve(config: ServiceConfig) -> io::Result<()> {
    let addr: SocketAddr = format!("{}:{}", config.host, config.port)
        .parse()
        .map_err(|err| io::Error::new(io::ErrorKind::InvalidInput, err))?;
    let listener = TcpListener::bind(addr).await?;
    axum::serve(listener, router(&config))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
