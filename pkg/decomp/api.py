from django.http import HttpRequest
from ninja import Router

from .cli import run
from .types import RunRequest, RunResponse

decomp_router = Router(tags=['decomp'])


@decomp_router.post('/run', response=RunResponse, url_name="run")
def run_command(request: HttpRequest, payload: RunRequest):
    # tables come with the request, paths in the config are never read
    config = payload.config.copy(update={'input_path': None, 'g_paths': [], 'h_path': None,
                                         'output_path': None})
    result = run(config, text=payload.table, g_texts=payload.g_tables, h_text=payload.h_table)
    return RunResponse(exit_code=result.exit_code, report=result.report)
