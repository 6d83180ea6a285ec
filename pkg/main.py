import os
from dotenv import load_dotenv
from csecs import create_cli


load_dotenv()


config_name = os.getenv('CSECS_CONFIG', 'development')


cli = create_cli(config_name)


if __name__ == '__main__':

    cli()
