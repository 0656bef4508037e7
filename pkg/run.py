from app import create_app

# Crear la aplicación Flask usando la función factory `create_app`
app = create_app()

if __name__ == '__main__':
    app.run(debug=True)
