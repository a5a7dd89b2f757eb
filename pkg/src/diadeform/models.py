"""Access to the bundled example model files."""

from importlib import resources

from .modelfile import parse_model


def bundled_model_names():
    root = resources.files(__package__) / "models"
    return sorted(p.name[:-3] for p in root.iterdir()
                  if p.name.endswith(".dl"))


def bundled_model_text(name):
    path = resources.files(__package__) / "models" / ("%s.dl" % name)
    return path.read_text()


def load_bundled_model(name, field_override=None):
    return parse_model(bundled_model_text(name),
                       field_override=field_override)
