from cli import cli
from config import settings

if __name__ == "__main__":
    cli(prog_name=settings.APP_NAME)
