from pitypical import create_cli


def main() -> None:
    create_cli()(prog_name="pitypical")


if __name__ == "__main__":
    main()
