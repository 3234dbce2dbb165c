"""Main FastAPI application."""
from contextlib import asynccontextmanager
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.config import init_output_dir
from app.routes import api

@asynccontextmanager
async def lifespan(app: FastAPI):
    """Manage application lifespan."""
    init_output_dir()  # Startup
    yield
    # Shutdown


app = FastAPI(
    title="Oscillator Max-Cut Solver",
    description="Gradient-flow oscillator solver for max-cut with rounding certificates",
    version="1.0.0",
    lifespan=lifespan,
)

# Add CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],  # In production, restrict this
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routers
app.include_router(api.router)


@app.get("/health")
async def health():
    """Health check endpoint."""
    return {"status": "ok"}
