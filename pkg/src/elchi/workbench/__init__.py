"""Command-line workbench: expression parser, serializers and suite runner."""
