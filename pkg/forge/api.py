from ninja import NinjaAPI

from decomp.api import decomp_router

api = NinjaAPI(version="1", csrf=False)

api.add_router('decomp', decomp_router)
