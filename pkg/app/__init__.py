from flask import Flask

from app.config import configure_logging, load_configurations

from .commands import descents_blueprint


def create_app(config_overrides=None):
    app = Flask(__name__)

    # Load configurations and logging settings
    load_configurations(app, config_overrides)
    configure_logging()

    # The blueprint carries no routes, only the CLI commands
    app.register_blueprint(descents_blueprint)

    return app
