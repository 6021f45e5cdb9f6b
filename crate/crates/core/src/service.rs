//! HTTP facade over projects, canvases, design and export.
//!
//! Project state lives in the server and is keyed by project name. Every
//! request on one project runs under that project's lock on a blocking
//! thread, so mutations apply in a single total order and reads see a
//! consistent snapshot. Different projects never contend.

use std::collections::HashMap;
use std::io;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, PoisonError};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post, put};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};
use tokio::net::TcpListener;
use tower_http::services::ServeDir;

use crate::canvas::{CanvasState, StrokeMode};
use crate::export::ExportFormat;
use crate::lattice::{BrickCoord, CanvasType, Grid, Node, Segment, ShapeSelection};
use crate::project::{round_nm, validate_name, Project, ProjectError};
use crate::seqdesign::DesignOutput;
use crate::Error;

const INDEX_HTML: &str = include_str!("service/index.html");

#[derive(Debug, Clone, Default)]
pub struct ServiceConfig {
    /// Directory holding the project folders.
    pub root: PathBuf,
    /// Static UI assets served at `/`; a built-in page is served when unset.
    pub ui_dir: Option<PathBuf>,
}

/// Error body `{code, message}` with its HTTP status.
#[derive(Debug, Clone, PartialEq)]
pub struct ApiError {
    pub status: StatusCode,
    pub code: String,
    pub message: String,
}

impl ApiError {
    fn bad_request(message: impl Into<String>) -> Self {
        ApiError { status: StatusCode::BAD_REQUEST, code: "BadRequest".into(), message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        ApiError { status: StatusCode::INTERNAL_SERVER_ERROR, code: "Internal".into(), message: message.into() }
    }
}

/// HTTP status for a library error code.
pub fn status_for(code: &str) -> StatusCode {
    match code {
        "NotFound" => StatusCode::NOT_FOUND,
        "AlreadyExists" | "StaleDesign" => StatusCode::CONFLICT,
        "EmptySelection" | "SequenceSpaceExhausted" => StatusCode::UNPROCESSABLE_ENTITY,
        "IoFailure" | "CorruptManifest" | "MissingBondSequence" | "UnplacedStrand" | "MalformedTable" => {
            StatusCode::INTERNAL_SERVER_ERROR
        }
        _ => StatusCode::BAD_REQUEST,
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let code = e.code();
        ApiError { status: status_for(code), code: code.to_string(), message: e.to_string() }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "code": self.code, "message": self.message }))).into_response()
    }
}

type ApiResult<T = Response> = Result<T, ApiError>;
type Handle = Arc<Mutex<Project>>;

struct App {
    config: ServiceConfig,
    projects: Mutex<HashMap<String, Handle>>,
}

impl App {
    /// The in-memory project `name`, loaded from disk on first use.
    fn open(&self, name: &str) -> ApiResult<Handle> {
        validate_name(name).map_err(Error::from)?;
        let mut projects = self.projects.lock().unwrap_or_else(PoisonError::into_inner);
        if let Some(h) = projects.get(name) {
            return Ok(h.clone());
        }
        let project = Project::load(&self.config.root.join(name))?;
        let handle = Arc::new(Mutex::new(project));
        projects.insert(name.to_string(), handle.clone());
        Ok(handle)
    }

    fn create(&self, name: &str) -> ApiResult<Handle> {
        let mut projects = self.projects.lock().unwrap_or_else(PoisonError::into_inner);
        let project = Project::create(name, &self.config.root)?;
        let handle = Arc::new(Mutex::new(project));
        projects.insert(name.to_string(), handle.clone());
        Ok(handle)
    }
}

type Shared = Arc<App>;

/// Runs `f` on project `name` while holding its lock.
async fn with_project<T, F>(app: &App, name: &str, f: F) -> ApiResult<T>
where
    T: Send + 'static,
    F: FnOnce(&mut Project) -> Result<T, ApiError> + Send + 'static,
{
    let handle = app.open(name)?;
    tokio::task::spawn_blocking(move || {
        let mut project = handle.lock().unwrap_or_else(PoisonError::into_inner);
        f(&mut project)
    })
    .await
    .map_err(|e| ApiError::internal(e.to_string()))?
}

/// Parses a JSON body; an empty body reads as `{}`.
fn body<T: DeserializeOwned>(bytes: &Bytes) -> ApiResult<T> {
    let bytes: &[u8] = if bytes.iter().all(u8::is_ascii_whitespace) { b"{}" } else { bytes };
    serde_json::from_slice(bytes).map_err(|e| ApiError::bad_request(format!("invalid request body: {e}")))
}

fn state_json(p: &Project) -> Value {
    let m = p.manifest();
    let dims = p.dims();
    let unsaved = p.pending_unsaved();
    json!({
        "name": m.name,
        "canvas_type": m.canvas_type,
        "rows": m.rows,
        "cols": m.cols,
        "height": m.height_nm,
        "width": m.width_nm,
        "height_units": dims.height_units(),
        "width_units": dims.width_units(),
        "total_nt": dims.total_nt(),
        "seed": m.seed,
        "params": m.params,
        "selection": m.selection,
        "draw_dirty": unsaved.draw_dirty,
        "brick_dirty": unsaved.brick_dirty,
    })
}

fn design_json(d: &DesignOutput) -> Value {
    let c = d.counts;
    let strands: Vec<Value> = d
        .strands
        .iter()
        .map(|s| json!({ "id": s.id.to_string(), "kind": s.kind.as_str(), "sequence": s.full_seq }))
        .collect();
    json!({
        "shape_hash": d.shape_hash.as_str(),
        "seed": d.seed,
        "canvas_type": d.canvas_type(),
        "height": round_nm(d.dims.height()),
        "width": round_nm(d.dims.width()),
        "counts": {
            "full_tiles": c.full_tiles,
            "half_tiles": c.half_tiles,
            "sticky_ends": c.sticky_ends,
            "bond_sequences": c.bond_sequences,
        },
        "strand_count": d.strands.len(),
        "total_bases": d.total_bases(),
        "strands": strands,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateBody {
    name: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DimsBody {
    height: f64,
    width: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CanvasBody {
    #[serde(rename = "type")]
    canvas_type: CanvasType,
    rows: Option<u32>,
    cols: Option<u32>,
}

#[derive(Deserialize, Default, Clone, Copy)]
#[serde(rename_all = "lowercase")]
enum ModeBody {
    #[default]
    Select,
    Deselect,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StrokeBody {
    p0: [u32; 2],
    p1: [u32; 2],
    #[serde(default)]
    mode: ModeBody,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ToggleBody {
    cell: Option<[u32; 2]>,
    segment: Option<[u32; 4]>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct DesignBody {
    seed: Option<u64>,
}

async fn index() -> Html<&'static str> {
    Html(INDEX_HTML)
}

async fn create_project(State(app): State<Shared>, raw: Bytes) -> ApiResult {
    let req: CreateBody = body(&raw)?;
    let handle = app.create(&req.name)?;
    let state = state_json(&handle.lock().unwrap_or_else(PoisonError::into_inner));
    Ok((StatusCode::CREATED, Json(state)).into_response())
}

async fn get_project(State(app): State<Shared>, Path(name): Path<String>) -> ApiResult<Json<Value>> {
    with_project(&app, &name, |p| Ok(state_json(p))).await.map(Json)
}

async fn put_dims(State(app): State<Shared>, Path(name): Path<String>, raw: Bytes) -> ApiResult<Json<Value>> {
    let req: DimsBody = body(&raw)?;
    with_project(&app, &name, move |p| {
        let (dims, adjusted) = p.set_dims(req.height, req.width)?;
        Ok(json!({
            "height": round_nm(dims.height()),
            "width": round_nm(dims.width()),
            "height_units": dims.height_units(),
            "width_units": dims.width_units(),
            "adjusted": adjusted,
        }))
    })
    .await
    .map(Json)
}

async fn put_canvas(State(app): State<Shared>, Path(name): Path<String>, raw: Bytes) -> ApiResult<Json<Value>> {
    let req: CanvasBody = body(&raw)?;
    with_project(&app, &name, move |p| {
        let current = p.canvas().grid();
        let grid =
            Grid::new(req.rows.unwrap_or(current.rows), req.cols.unwrap_or(current.cols)).map_err(Error::from)?;
        p.replace_canvas(CanvasState::new(req.canvas_type, grid));
        Ok(state_json(p))
    })
    .await
    .map(Json)
}

async fn post_strokes(State(app): State<Shared>, Path(name): Path<String>, raw: Bytes) -> ApiResult<Json<Value>> {
    let req: StrokeBody = body(&raw)?;
    with_project(&app, &name, move |p| {
        let mode = match req.mode {
            ModeBody::Select => StrokeMode::Select,
            ModeBody::Deselect => StrokeMode::Deselect,
        };
        let canvas = p.canvas_mut();
        let changed = match canvas.canvas_type() {
            CanvasType::FreeHand => canvas.apply_stroke_free(
                BrickCoord::new(req.p0[0], req.p0[1]),
                BrickCoord::new(req.p1[0], req.p1[1]),
                mode,
            ),
            CanvasType::Digitized => {
                canvas.apply_stroke_digitized(Node::new(req.p0[0], req.p0[1]), Node::new(req.p1[0], req.p1[1]), mode)
            }
        }
        .map_err(Error::from)?;
        let mut state = state_json(p);
        state["changed"] = json!(changed);
        Ok(state)
    })
    .await
    .map(Json)
}

async fn post_toggle(State(app): State<Shared>, Path(name): Path<String>, raw: Bytes) -> ApiResult<Json<Value>> {
    let req: ToggleBody = body(&raw)?;
    with_project(&app, &name, move |p| {
        let canvas = p.canvas_mut();
        let selected = match (req.cell, req.segment) {
            (Some([row, col]), None) => {
                let c = BrickCoord::new(row, col);
                canvas.toggle_brick(c).map_err(Error::from)?;
                matches!(canvas.selection(), ShapeSelection::Free(cells) if cells.contains(&c))
            }
            (None, Some([x1, y1, x2, y2])) => {
                let s = Segment::new(Node::new(x1, y1), Node::new(x2, y2)).map_err(Error::from)?;
                canvas.toggle_segment(s).map_err(Error::from)?;
                matches!(canvas.selection(), ShapeSelection::Digitized(segs) if segs.contains(&s))
            }
            _ => return Err(ApiError::bad_request("give exactly one of `cell` or `segment`")),
        };
        let mut state = state_json(p);
        state["selected"] = json!(selected);
        Ok(state)
    })
    .await
    .map(Json)
}

async fn post_clear(State(app): State<Shared>, Path(name): Path<String>) -> ApiResult<Json<Value>> {
    with_project(&app, &name, |p| {
        let changed = p.canvas_mut().clear();
        let mut state = state_json(p);
        state["changed"] = json!(changed);
        Ok(state)
    })
    .await
    .map(Json)
}

async fn post_design(State(app): State<Shared>, Path(name): Path<String>, raw: Bytes) -> ApiResult<Json<Value>> {
    let req: DesignBody = body(&raw)?;
    with_project(&app, &name, move |p| Ok(design_json(&p.design(req.seed)?))).await.map(Json)
}

async fn post_save(State(app): State<Shared>, Path(name): Path<String>) -> ApiResult<Json<Value>> {
    with_project(&app, &name, |p| {
        let design = p.design(None)?;
        let files: Vec<String> = p
            .save_all(&design)?
            .iter()
            .filter_map(|f| f.file_name().map(|n| n.to_string_lossy().into_owned()))
            .collect();
        Ok(json!({ "files": files }))
    })
    .await
    .map(Json)
}

async fn get_dirty(State(app): State<Shared>, Path(name): Path<String>) -> ApiResult<Json<Value>> {
    with_project(&app, &name, |p| Ok(json!(p.pending_unsaved()))).await.map(Json)
}

async fn get_export(State(app): State<Shared>, Path((name, format)): Path<(String, String)>) -> ApiResult {
    let format: ExportFormat = format.parse().map_err(Error::from)?;
    let (file_name, bytes) = with_project(&app, &name, move |p| Ok(p.export(format)?)).await?;
    Ok((
        [
            (header::CONTENT_TYPE, format.media_type().to_string()),
            (header::CONTENT_DISPOSITION, format!("attachment; filename=\"{file_name}\"")),
        ],
        bytes,
    )
        .into_response())
}

/// Builds the service router.
pub fn router(config: ServiceConfig) -> Router {
    let ui_dir = config.ui_dir.clone();
    let app = Arc::new(App { config, projects: Mutex::new(HashMap::new()) });
    let api = Router::new()
        .route("/projects", post(create_project))
        .route("/projects/{name}", get(get_project))
        .route("/projects/{name}/dims", put(put_dims))
        .route("/projects/{name}/canvas", put(put_canvas))
        .route("/projects/{name}/strokes", post(post_strokes))
        .route("/projects/{name}/toggle", post(post_toggle))
        .route("/projects/{name}/clear", post(post_clear))
        .route("/projects/{name}/design", post(post_design))
        .route("/projects/{name}/save", post(post_save))
        .route("/projects/{name}/dirty", get(get_dirty))
        .route("/projects/{name}/export/{format}", get(get_export))
        .with_state(app);
    match ui_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir).append_index_html_on_directories(true)),
        None => api.route("/", get(index)),
    }
}

/// Serves on an already bound listener until the process ends.
pub async fn serve_listener(listener: TcpListener, config: ServiceConfig) -> io::Result<()> {
    axum::serve(listener, router(config)).await
}

/// Binds `127.0.0.1:port` and serves.
pub async fn serve(port: u16, config: ServiceConfig) -> crate::Result<()> {
    let addr = SocketAddr::from(([127, 0, 0, 1], port));
    let io_err = |source| ProjectError::Io { path: config.root.clone(), source };
    let listener = TcpListener::bind(addr).await.map_err(io_err)?;
    eprintln!("serving {} on http://{}", config.root.display(), listener.local_addr().map_err(io_err)?);
    serve_listener(listener, config.clone()).await.map_err(io_err)?;
    Ok(())
}
