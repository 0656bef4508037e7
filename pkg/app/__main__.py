from app.cli import cli

# Punto de entrada de la línea de comandos: python -m app <comando>
if __name__ == '__main__':
    cli()
